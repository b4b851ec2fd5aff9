// fock.hpp: truncated boson + qubit operators on the joint space
//
// Joint basis ordering is qubit-outer / field-inner:
//   (|2>|0>, ..., |2>|n_max>, |1>|0>, ..., |1>|n_max>)
// with |2> the excited qubit state, sigma_z |2> = +|2>.

#pragma once

#include <cstddef>
#include <optional>

#include "rwa/linalg.hpp"

namespace rwa {

struct TruncationConfig {
    std::size_t n_max = 200;  // highest retained Fock state

    std::size_t field_dim() const noexcept { return n_max + 1; }
    std::size_t joint_dim() const noexcept { return 2 * (n_max + 1); }
    void validate() const;

    /// Joint-space index of |qubit> (x) |n>; qubit 2 is the excited state.
    std::size_t index(int qubit, std::size_t n) const;
};

struct LadderOps {
    ComplexMatrix a;
    ComplexMatrix a_dag;
    ComplexMatrix n_hat;
};

struct QuadratureOps {
    ComplexMatrix x_hat;  // (a + a^dag)/sqrt(2)
    ComplexMatrix p_hat;  // i (a - a^dag)/sqrt(2)
};

struct QubitOps {
    ComplexMatrix sigma_x;
    ComplexMatrix sigma_y;
    ComplexMatrix sigma_z;
    ComplexMatrix sigma_plus;   // |2><1|
    ComplexMatrix sigma_minus;  // |1><2|
};

LadderOps ladder_ops(const TruncationConfig& cfg);
QuadratureOps quadrature_ops(const TruncationConfig& cfg);
QubitOps qubit_ops();

/// qubit_op (x) field_op on the joint space; std::nullopt stands for the identity.
ComplexMatrix embed(const std::optional<ComplexMatrix>& field_op, const std::optional<ComplexMatrix>& qubit_op,
                    const TruncationConfig& cfg);

inline ComplexMatrix embed_field(const ComplexMatrix& field_op, const TruncationConfig& cfg) {
    return embed(field_op, std::nullopt, cfg);
}

inline ComplexMatrix embed_qubit(const ComplexMatrix& qubit_op, const TruncationConfig& cfg) {
    return embed(std::nullopt, qubit_op, cfg);
}

/// Basis vector |qubit> (x) |n> on the joint space.
ComplexVector basis_state(int qubit, std::size_t n, const TruncationConfig& cfg);

}  // namespace rwa
