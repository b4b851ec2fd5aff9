#include "rwa/fock.hpp"

#include <cmath>
#include <sstream>

namespace rwa {

void TruncationConfig::validate() const {
    if (n_max < 1) throw std::invalid_argument("TruncationConfig: n_max must be >= 1");
}

std::size_t TruncationConfig::index(int qubit, std::size_t n) const {
    if (qubit != 1 && qubit != 2) throw std::invalid_argument("TruncationConfig::index: qubit label must be 1 or 2");
    if (n > n_max) throw std::invalid_argument("TruncationConfig::index: Fock number beyond n_max");
    return (qubit == 2 ? 0 : field_dim()) + n;
}

LadderOps ladder_ops(const TruncationConfig& cfg) {
    cfg.validate();
    const std::size_t d = cfg.field_dim();
    LadderOps ops{ComplexMatrix(d), ComplexMatrix(d), ComplexMatrix(d)};
    for (std::size_t n = 1; n < d; ++n) {
        const double s = std::sqrt(static_cast<double>(n));
        ops.a(n - 1, n) = s;
        ops.a_dag(n, n - 1) = s;
    }
    for (std::size_t n = 0; n < d; ++n) ops.n_hat(n, n) = static_cast<double>(n);
    return ops;
}

QuadratureOps quadrature_ops(const TruncationConfig& cfg) {
    const LadderOps l = ladder_ops(cfg);
    const double r = 1.0 / std::sqrt(2.0);
    QuadratureOps q{(l.a + l.a_dag) * r, (l.a - l.a_dag) * Complex(0.0, r)};
    return q;
}

QubitOps qubit_ops() {
    QubitOps q{ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2)};
    q.sigma_x(0, 1) = 1.0;
    q.sigma_x(1, 0) = 1.0;
    q.sigma_y(0, 1) = Complex(0.0, -1.0);
    q.sigma_y(1, 0) = Complex(0.0, 1.0);
    q.sigma_z(0, 0) = 1.0;
    q.sigma_z(1, 1) = -1.0;
    q.sigma_plus(0, 1) = 1.0;
    q.sigma_minus(1, 0) = 1.0;
    return q;
}

ComplexMatrix embed(const std::optional<ComplexMatrix>& field_op, const std::optional<ComplexMatrix>& qubit_op,
                    const TruncationConfig& cfg) {
    cfg.validate();
    if (field_op && field_op->dim() != cfg.field_dim()) {
        std::ostringstream msg;
        msg << "embed: field operator has dimension " << field_op->dim() << ", expected " << cfg.field_dim();
        throw std::invalid_argument(msg.str());
    }
    if (qubit_op && qubit_op->dim() != 2) throw std::invalid_argument("embed: qubit operator must be 2x2");
    const ComplexMatrix f = field_op ? *field_op : ComplexMatrix::identity(cfg.field_dim());
    const ComplexMatrix q = qubit_op ? *qubit_op : ComplexMatrix::identity(2);
    return kron(q, f);
}

ComplexVector basis_state(int qubit, std::size_t n, const TruncationConfig& cfg) {
    ComplexVector v(cfg.joint_dim(), Complex(0.0, 0.0));
    v[cfg.index(qubit, n)] = 1.0;
    return v;
}

}  // namespace rwa
