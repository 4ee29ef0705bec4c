#include "rcm/oze.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace rcm {

OzeSolution solve_oze_fourier(const GridFunction& P, double t, double spectral_floor) {
    if (t < 0.0) throw std::invalid_argument("intensity must be nonnegative");
    SpectralFunction Phat = forward_fft(P);
    double min_den = std::numeric_limits<double>::infinity();
    std::size_t worst = 0;
    for (std::size_t k = 0; k < Phat.coefficients.size(); ++k) {
        const double den = 1.0 + t * Phat.coefficients[k].real();
        if (den < min_den) {
            min_den = den;
            worst = k;
        }
    }
    if (min_den <= spectral_floor) {
        std::ostringstream os;
        os << "spectral floor violated: 1 + t*P_hat = " << min_den << " at frequency index "
           << worst << " (supercritical or invalid input)";
        throw std::runtime_error(os.str());
    }
    for (auto& c : Phat.coefficients) c /= (1.0 + t * c);
    OzeSolution sol{inverse_fft(Phat), min_den};
    return sol;
}

NeumannSolution solve_oze_neumann(const GridFunction& P, double t, int max_terms, double tol) {
    const double tp1 = t * P.l1_norm();
    if (tp1 >= 1.0)
        throw std::invalid_argument("Neumann series requires t*||P||_1 < 1, got " +
                                    std::to_string(tp1));
    NeumannSolution out;
    out.Q = P;
    GridFunction term = P;
    for (int n = 1; n <= max_terms; ++n) {
        term = convolve(term, P);
        const double scale = -t;
        for (std::size_t i = 0; i < term.size(); ++i) term[i] *= scale;
        for (std::size_t i = 0; i < out.Q.size(); ++i) out.Q[i] += term[i];
        out.terms_used = n + 1;
        out.last_term_sup = term.sup_norm();
        if (out.last_term_sup < tol) return out;
    }
    throw std::runtime_error("Neumann series did not converge within max_terms; last term " +
                             std::to_string(out.last_term_sup));
}

double mean_cluster_from_Q(const GridFunction& Q, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("mean_cluster_from_Q requires t > 0");
    const double I = Q.integral();
    if (I < 0.0 || t * I >= 1.0)
        throw std::runtime_error("int Q = " + std::to_string(I) +
                                 " outside [0, 1/t): invalid P or supercritical regime");
    return 1.0 / (1.0 - t * I);
}

double oze_residual(const GridFunction& P, const GridFunction& Q, double t) {
    GridFunction conv = convolve(Q, P);
    double m = 0.0;
    for (std::size_t i = 0; i < P.size(); ++i)
        m = std::max(m, std::abs(P[i] - Q[i] - t * conv[i]));
    return m;
}

}  // namespace rcm
