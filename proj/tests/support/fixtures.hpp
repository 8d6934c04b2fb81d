// fixtures.hpp - hand-checked reference instances

#ifndef DUALRANK_TESTS_FIXTURES_HPP
#define DUALRANK_TESTS_FIXTURES_HPP

#include "dualrank/dualrank.hpp"

namespace dualrank::fixtures {

inline Rational q(long n, long d = 1) { return rat(n, d); }

// 2x2 instance with no dual r-rank decomposition.
inline RealDualMatrix inconsistent_2x2() {
    return {RealMatrix{{1, 0}, {0, 0}}, RealMatrix{{1, 1}, {1, 1}}};
}

inline RealMatrix inconsistent_2x2_residual() { return RealMatrix{{0, 0}, {0, 1}}; }

// Rank-2 3x3 instance and its known decomposition / DMPGI.
inline RealDualMatrix rank2_3x3() {
    return {RealMatrix{{1, 2, 1}, {2, 1, 1}, {3, 3, 2}}, RealMatrix{{1, 4, 7}, {2, 5, 8}, {3, 6, 14}}};
}

inline RealMatrix rank2_a2() { return RealMatrix{{1, 2}, {2, 1}, {3, 3}}; }
inline RealMatrix rank2_a4() { return RealMatrix{{1, 0, q(1, 3)}, {0, 1, q(1, 3)}}; }

inline RealMatrix rank2_a2_pinv() {
    return RealMatrix{{q(-4, 9), q(5, 9), q(1, 9)}, {q(5, 9), q(-4, 9), q(1, 9)}};
}

inline RealMatrix rank2_a4_pinv() {
    return RealMatrix{{q(10, 11), q(-1, 11)}, {q(-1, 11), q(10, 11)}, {q(3, 11), q(3, 11)}};
}

inline RealMatrix rank2_p() { return RealMatrix{{q(1, 2), q(1, 2)}, {-1, q(1, 2)}}; }

inline RealMatrix rank2_a3() { return RealMatrix{{q(3, 2), q(-1, 2)}, {0, q(-1, 2)}, {q(3, 2), -4}}; }

inline RealMatrix rank2_a5() {
    return RealMatrix{{q(3, 2), q(13, 6), q(29, 9)}, {-1, q(7, 6), q(31, 18)}};
}

inline DualRankFactors<Rational> rank2_factors() {
    return {RealDualMatrix(rank2_a2(), rank2_a3()), RealDualMatrix(rank2_a4(), rank2_a5())};
}

inline RealDualMatrix rank2_dmpgi() {
    return {RealMatrix{{q(-5, 11), q(6, 11), q(1, 11)}, {q(6, 11), q(-5, 11), q(1, 11)}, {q(1, 33), q(1, 33), q(2, 33)}},
            RealMatrix{{q(-31, 33), q(-16, 33), q(1, 33)},
                       {q(2, 11), q(7, 11), q(-8, 11)},
                       {q(-25, 99), q(38, 99), q(10, 99)}}};
}

// A^ A^+ and A^+ A^ for the rank-2 instance.
inline RealDualMatrix rank2_left_projector() {
    return {RealMatrix{{q(2, 3), q(-1, 3), q(1, 3)}, {q(-1, 3), q(2, 3), q(1, 3)}, {q(1, 3), q(1, 3), q(2, 3)}},
            RealMatrix{{q(10, 9), q(1, 9), q(-4, 9)}, {q(1, 9), q(-8, 9), q(5, 9)}, {q(-4, 9), q(5, 9), q(-2, 9)}}};
}

inline RealDualMatrix rank2_right_projector() {
    return {RealMatrix{{q(10, 11), q(-1, 11), q(3, 11)}, {q(-1, 11), q(10, 11), q(3, 11)}, {q(3, 11), q(3, 11), q(2, 11)}},
            RealMatrix{{q(-10, 11), q(-9, 11), q(12, 11)}, {q(-9, 11), q(-8, 11), q(9, 11)}, {q(12, 11), q(9, 11), q(18, 11)}}};
}

// Symmetric dual idempotent: diag(1, 0) + eps [[0, 1], [1, 0]].
inline RealDualMatrix symmetric_idempotent_2x2() {
    return {RealMatrix{{1, 0}, {0, 0}}, RealMatrix{{0, 1}, {1, 0}}};
}

}  // namespace dualrank::fixtures

#endif  // DUALRANK_TESTS_FIXTURES_HPP
