// oracle.cpp — Matrix reconstruction of coefficients and quadrature spectra

#include "omfwm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "omfwm/errors.hpp"

namespace omfwm::oracle {

namespace {

using C = std::complex<double>;
constexpr C I{0.0, 1.0};
using Matrix4x6 = Eigen::Matrix<C, 4, kPorts>;

// x' = drift x + injection xi for x = (a_1, a_1^dag, b_1, b_1^dag).
Eigen::Matrix4cd drift(const SystemParams& p) {
    const double dm = p.delta_m();
    const double gm = p.g_minus;
    const double gp = p.g_plus;
    Eigen::Matrix4cd d;
    // clang-format off
    d << -p.kappa / 2.0, 0.0,            -I * gm,                     -I * gp,
         0.0,            -p.kappa / 2.0,  I * gp,                      I * gm,
         -I * gm,        -I * gp,        -(I * dm + p.gamma_m / 2.0),  0.0,
          I * gp,         I * gm,         0.0,                        -(-I * dm + p.gamma_m / 2.0);
    // clang-format on
    return d;
}

Matrix4x6 injection(const SystemParams& p) {
    const double se = std::sqrt(p.kappa_ex);
    const double s0 = std::sqrt(std::max(p.kappa_0(), 0.0));
    const double sg = std::sqrt(p.gamma_m);
    Matrix4x6 b = Matrix4x6::Zero();
    b(0, a_in) = se;
    b(0, a_v) = s0;
    b(1, a_in_dag) = se;
    b(1, a_v_dag) = s0;
    b(2, eta) = sg;
    b(3, eta_dag) = sg;
    return b;
}

// Rows of a_r1[nu] and a_r1^dag[nu] over the six ports.
OutputRows rows_at(double nu, const SystemParams& p) {
    return output_rows(transfer_matrix(nu, p), p);
}

struct Component {
    double nu;
    RowVector6 row;
};

using Operator = std::vector<Component>;

void add(Operator& op, double nu, const RowVector6& row) {
    for (auto& c : op) {
        if (c.nu == nu) {
            c.row += row;
            return;
        }
    }
    op.push_back({nu, row});
}

// X^+ and Y^- at analysis frequency w, assembled from the individual
// signal/FWM quadratures.
struct CombinedQuadratures {
    Operator x_plus;
    Operator y_minus;
};

CombinedQuadratures combined_at(double omega, double delta_s, const SystemParams& p) {
    const double w1 = omega - delta_s;
    const double w2 = omega + delta_s;
    const auto r1 = rows_at(w1, p);
    const auto r2 = rows_at(w2, p);
    const double h = 1.0 / std::sqrt(2.0);

    // (nu, row) pairs for each single-field quadrature.
    const Operator xs = {{w1, h * r1.field}, {w2, h * r2.conjugate}};
    const Operator ys = {{w1, -I * h * r1.field}, {w2, I * h * r2.conjugate}};
    const Operator xc = {{w2, h * r2.field}, {w1, h * r1.conjugate}};
    const Operator yc = {{w2, -I * h * r2.field}, {w1, I * h * r1.conjugate}};

    CombinedQuadratures q;
    for (const auto& c : xs) add(q.x_plus, c.nu, h * c.row);
    for (const auto& c : xc) add(q.x_plus, c.nu, h * c.row);
    for (const auto& c : ys) add(q.y_minus, c.nu, h * c.row);
    for (const auto& c : yc) add(q.y_minus, c.nu, -h * c.row);
    return q;
}

// Coefficient of delta(w + w') in <O(w) O(w')>.
C stationary_spectrum(const Operator& at_w, const Operator& at_minus_w,
                      const Eigen::Matrix<C, kPorts, kPorts>& k) {
    C s{0.0, 0.0};
    for (const auto& a : at_w) {
        for (const auto& b : at_minus_w) {
            const double scale = std::abs(a.nu) + std::abs(b.nu);
            if (std::abs(a.nu + b.nu) <= 1e-12 * scale) s += (a.row * k * b.row.transpose())(0, 0);
        }
    }
    return s;
}

struct SpectrumPair {
    C xx;
    C yy;
};

SpectrumPair spectra_at(double omega, double delta_s, const SystemParams& p,
                        const Eigen::Matrix<C, kPorts, kPorts>& k) {
    const auto plus = combined_at(omega, delta_s, p);
    const auto minus = combined_at(-omega, delta_s, p);
    return {stationary_spectrum(plus.x_plus, minus.x_plus, k),
            stationary_spectrum(plus.y_minus, minus.y_minus, k)};
}

std::array<C, 8> as_array(const CoefficientSet& s) {
    return {s.A, s.B, s.C, s.D, s.M, s.N, s.P, s.Q};
}

}  // namespace

TransferMatrix transfer_matrix(double omega, const SystemParams& p) {
    const Eigen::Matrix4cd lhs = -I * omega * Eigen::Matrix4cd::Identity() - drift(p);
    const Eigen::JacobiSVD<Eigen::Matrix4cd> svd(lhs);
    const auto& sv = svd.singularValues();
    const double cond = sv(3) > 0.0 ? sv(0) / sv(3) : std::numeric_limits<double>::infinity();
    if (!(cond <= kMaxConditionNumber)) {
        std::ostringstream os;
        os << "transfer_matrix: condition number " << cond << " at omega = " << omega
           << " exceeds " << kMaxConditionNumber;
        throw DegenerateSystem(os.str());
    }
    const Matrix4x6 solved = lhs.fullPivLu().solve(injection(p));

    TransferMatrix t;
    t.omega = omega;
    t.condition_number = cond;
    t.inputs.col(0) = solved.col(a_in);
    t.inputs.col(1) = solved.col(a_in_dag);
    t.inputs.col(2) = solved.col(eta);
    t.inputs.col(3) = solved.col(eta_dag);
    t.vacuum.col(0) = solved.col(a_v);
    t.vacuum.col(1) = solved.col(a_v_dag);
    return t;
}

OutputRows output_rows(const TransferMatrix& t, const SystemParams& p) {
    const double se = std::sqrt(p.kappa_ex);
    auto row = [&](int r) {
        RowVector6 v;
        v(a_in) = se * t.inputs(r, 0);
        v(a_in_dag) = se * t.inputs(r, 1);
        v(a_v) = se * t.vacuum(r, 0);
        v(a_v_dag) = se * t.vacuum(r, 1);
        v(eta) = se * t.inputs(r, 2);
        v(eta_dag) = se * t.inputs(r, 3);
        return v;
    };
    OutputRows out{row(0), row(1)};
    out.field(a_in) -= 1.0;
    out.conjugate(a_in_dag) -= 1.0;
    return out;
}

CoefficientSet coefficients_from_matrix(const TransferMatrix& t, const SystemParams& p) {
    const double se = std::sqrt(p.kappa_ex);
    const double sg = std::sqrt(p.gamma_m);
    CoefficientSet s;
    s.omega = t.omega;
    s.A = t.inputs(0, 0) / se;
    s.B = t.inputs(0, 1) / se;
    s.C = t.inputs(0, 2) / sg;
    s.D = t.inputs(0, 3) / sg;
    s.M = t.inputs(1, 0) / se;
    s.N = t.inputs(1, 1) / se;
    s.P = t.inputs(1, 2) / sg;
    s.Q = t.inputs(1, 3) / sg;
    return s;
}

Eigen::Matrix<std::complex<double>, kPorts, kPorts> noise_correlator(double n_th) {
    Eigen::Matrix<C, kPorts, kPorts> k = Eigen::Matrix<C, kPorts, kPorts>::Zero();
    k(a_in, a_in_dag) = 1.0;
    k(a_v, a_v_dag) = 1.0;
    k(eta, eta_dag) = n_th + 1.0;
    k(eta_dag, eta) = n_th;
    return k;
}

QuadratureSpectra spectra_via_matrix(const FrequencyGrid& grid, double delta_s,
                                     const SystemParams& p) {
    require_stable(p);
    if (delta_s == 0.0)
        throw std::domain_error("signal detuning must be nonzero: signal and FWM sidebands coincide");
    const auto k = noise_correlator(p.n_th);
    QuadratureSpectra out;
    out.grid = grid;
    out.delta_s_used = delta_s;
    out.n_th_used = p.n_th;
    for (double w : grid.points()) {
        const auto s = spectra_at(w, delta_s, p, k);
        out.max_imag_residual = std::max({out.max_imag_residual, std::abs(s.xx.imag()) / std::abs(s.xx),
                                          std::abs(s.yy.imag()) / std::abs(s.yy)});
        out.s_xx_plus.push_back(s.xx.real());
        out.s_yy_minus.push_back(s.yy.real());
        out.s_db.push_back(normalized_db(s.xx.real()));
    }
    return out;
}

double relative_error(std::complex<double> x, std::complex<double> y, double floor) {
    const double denom = std::max({std::abs(x), std::abs(y), floor});
    if (denom == 0.0) return 0.0;
    return std::abs(x - y) / denom;
}

OracleComparison compare(const SystemParams& p, const FrequencyGrid& grid, double tol,
                         Convention closed_form) {
    OracleComparison cmp;
    cmp.tolerance = tol;
    auto fail = [&](std::string note) {
        cmp.deviations.push_back(std::move(note));
        cmp.passed = false;
    };

    try {
        require_stable(p);
    } catch (const std::exception& e) {
        fail(std::string("parameters rejected: ") + e.what());
        return cmp;
    }
    cmp.delta_s = default_signal_detuning(p);
    const auto k = noise_correlator(p.n_th);
    constexpr double eps = std::numeric_limits<double>::epsilon();

    bool all_passed = true;
    std::size_t printed_worst = 0;
    for (double w : grid.points()) {
        PointComparison pt;
        pt.omega = w;
        try {
            const auto t = transfer_matrix(w, p);
            const auto from_matrix = as_array(coefficients_from_matrix(t, p));
            const auto closed = as_array(coefficients(w, p, closed_form));
            double scale = 0.0;
            for (std::size_t i = 0; i < 8; ++i)
                scale = std::max({scale, std::abs(from_matrix[i]), std::abs(closed[i])});
            for (std::size_t i = 0; i < 8; ++i)
                pt.coefficient_errors[i] = relative_error(closed[i], from_matrix[i], 1e-6 * scale);

            double cond = t.condition_number;
            for (double nu : {w - cmp.delta_s, w + cmp.delta_s})
                cond = std::max({cond, transfer_matrix(nu, p).condition_number,
                                 transfer_matrix(-nu, p).condition_number});
            pt.condition_number = cond;

            const auto m = spectra_at(w, cmp.delta_s, p, k);
            const auto derived = correlation_terms(w, cmp.delta_s, p, AppendixForm::derived);
            const auto printed = correlation_terms(w, cmp.delta_s, p, AppendixForm::printed);
            pt.s_xx_error = relative_error(derived.s_xx_plus(), m.xx, 0.0);
            pt.s_yy_error = relative_error(derived.s_yy_minus(), m.yy, 0.0);
            pt.printed_appendix_error = relative_error(printed.s_xx_plus(), m.xx, 0.0);

            pt.tolerance_used = std::max(tol, 1e3 * eps * cond);
            const double worst_coeff =
                *std::max_element(pt.coefficient_errors.begin(), pt.coefficient_errors.end());
            pt.passed = worst_coeff <= pt.tolerance_used && pt.s_xx_error <= pt.tolerance_used &&
                        pt.s_yy_error <= pt.tolerance_used;
        } catch (const std::exception& e) {
            pt.passed = false;
            std::ostringstream os;
            os << "omega = " << w << ": " << e.what();
            cmp.deviations.push_back(os.str());
        }

        for (std::size_t i = 0; i < 8; ++i)
            cmp.max_coefficient_errors[i] =
                std::max(cmp.max_coefficient_errors[i], pt.coefficient_errors[i]);
        cmp.max_s_xx_error = std::max(cmp.max_s_xx_error, pt.s_xx_error);
        cmp.max_s_yy_error = std::max(cmp.max_s_yy_error, pt.s_yy_error);
        if (pt.printed_appendix_error > cmp.max_printed_appendix_error) {
            cmp.max_printed_appendix_error = pt.printed_appendix_error;
            printed_worst = cmp.points.size();
        }
        all_passed = all_passed && pt.passed;
        cmp.points.push_back(pt);
    }

    for (const auto& e : cmp.max_coefficient_errors) cmp.max_error = std::max(cmp.max_error, e);
    cmp.max_error = std::max({cmp.max_error, cmp.max_s_xx_error, cmp.max_s_yy_error});

    for (std::size_t i = 0; i < 8; ++i) {
        if (cmp.max_coefficient_errors[i] > tol) {
            std::ostringstream os;
            os << "coefficient " << kCoefficientNames[i] << " deviates from the matrix solve by "
               << cmp.max_coefficient_errors[i] << " (relative)";
            cmp.deviations.push_back(os.str());
        }
    }
    if (cmp.max_printed_appendix_error > tol && !cmp.points.empty()) {
        std::ostringstream os;
        os << "printed-appendix deviation: literal thermal pairings in the signal-signal and "
              "FWM-FWM terms differ from the matrix reconstruction by up to "
           << cmp.max_printed_appendix_error << " (relative, at omega = "
           << cmp.points[printed_worst].omega << "); production path uses derived pairings";
        cmp.deviations.push_back(os.str());
    }
    cmp.passed = all_passed && !cmp.points.empty();
    return cmp;
}

}  // namespace omfwm::oracle
