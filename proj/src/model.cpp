#include "accinfo/model.hpp"

#include <sstream>

namespace accinfo {

double Ensemble::total_weight() const {
    double sum = 0.0;
    for (const CMatrix& op : ops) sum += op.trace().real();
    return sum;
}

std::vector<CMatrix> Povm::outcomes() const {
    std::vector<CMatrix> out;
    out.reserve(factors.size());
    for (const CMatrix& a : factors) out.push_back(a.adjoint() * a);
    return out;
}

double completeness_residual(const Povm& p) {
    CMatrix s = CMatrix::Zero(p.dim, p.dim);
    for (const CMatrix& a : p.factors) s += a.adjoint() * a;
    s -= CMatrix::Identity(p.dim, p.dim);
    return spectral_norm(s);
}

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    for (const Violation& v : violations) os << v.message << "\n";
    return os.str();
}

ValidationReport validate_ensemble(const Ensemble& e) {
    ValidationReport report;
    auto add = [&](Violation::Kind kind, int index, double magnitude,
                   std::string message) {
        report.violations.push_back(
            {kind, index, magnitude, std::move(message)});
    };

    for (int j = 0; j < e.size(); ++j) {
        const CMatrix& op = e.ops[j];
        if (op.rows() != op.cols()) {
            std::ostringstream os;
            os << "operator " << j + 1 << " is not square (" << op.rows()
               << "x" << op.cols() << ")";
            add(Violation::Kind::NotSquare, j, static_cast<double>(op.rows()),
                os.str());
            continue;
        }
        if (op.rows() != e.dim) {
            std::ostringstream os;
            os << "operator " << j + 1 << " has dimension " << op.rows()
               << ", expected " << e.dim;
            add(Violation::Kind::DimensionMismatch, j,
                static_cast<double>(op.rows()), os.str());
            continue;
        }
        const double herm = herm_residual(op);
        if (herm > kHermTol) {
            std::ostringstream os;
            os << "operator " << j + 1 << " is not hermitian (residual "
               << herm << ")";
            add(Violation::Kind::NotHermitian, j, herm, os.str());
        }
        const double min_eig = min_eigenvalue_hermitian(op);
        if (min_eig < -kPsdTol) {
            std::ostringstream os;
            os << "operator " << j + 1 << " has negative eigenvalue "
               << min_eig;
            add(Violation::Kind::NotPsd, j, min_eig, os.str());
        }
    }

    const double total = e.total_weight();
    if (std::abs(total - 1.0) > kTraceSumTol) {
        std::ostringstream os;
        os << "statistical weights (traces) must add to unity; sum = "
           << total;
        add(Violation::Kind::TraceSum, -1, total, os.str());
    }
    return report;
}

ProbTable probability_table(const Ensemble& e, const Povm& m) {
    if (e.dim != m.dim) {
        throw DimensionMismatch(
            "probability_table: ensemble and POVM dimensions differ");
    }
    for (const CMatrix& op : e.ops) {
        if (op.rows() != e.dim || op.cols() != e.dim) {
            throw DimensionMismatch("probability_table: operator shape");
        }
    }
    for (const CMatrix& a : m.factors) {
        if (a.rows() != m.dim || a.cols() != m.dim) {
            throw DimensionMismatch("probability_table: factor shape");
        }
    }

    const int num_j = e.size();
    const int num_k = m.size();
    const std::vector<CMatrix> outcomes = m.outcomes();

    ProbTable t;
    t.joint.resize(num_j, num_k);
    for (int j = 0; j < num_j; ++j) {
        for (int k = 0; k < num_k; ++k) {
            double p = trace_product(e.ops[j], outcomes[k]).real();
            p = std::min(std::max(p, 0.0), 1.0);
            t.joint(j, k) = p;
        }
    }
    t.row_marginals = t.joint.rowwise().sum();
    t.col_marginals = t.joint.colwise().sum();
    return t;
}

}  // namespace accinfo
