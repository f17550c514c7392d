#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Core>

#include "oscloc/system.hpp"

namespace oscloc {

/// Symbol f of the Weyl operator W(f) = exp(i sum_x (Re f(x) q_x + Im f(x) p_x)).
struct WeylSymbol {
    Eigen::VectorXcd values;

    static WeylSymbol zero(Eigen::Index sites);
    static WeylSymbol delta(Eigen::Index sites, SiteIndex site, std::complex<double> coefficient);

    Eigen::Index size() const noexcept { return values.size(); }
    Eigen::VectorXd position_part() const { return values.real(); }
    Eigen::VectorXd momentum_part() const { return values.imag(); }
};

/// Im <f, g> with the inner product antilinear in the first slot.
double symplectic_pairing(const WeylSymbol& f, const WeylSymbol& g);

/// f_t with tau_t(W(f)) = W(f_t).
WeylSymbol evolve_symbol(const OscillatorSystem& system, const WeylSymbol& f, double t);

/// Im <f_t, g> evaluated as four spectral sandwiches of h, without forming f_t.
double im_pairing(const OscillatorSystem& system, const WeylSymbol& f, const WeylSymbol& g,
                  double t);

/// || [tau_t(W(f)), W(g)] || = |exp(-i theta) - 1| = 2 |sin(theta / 2)|,
/// theta = Im <f_t, g>.
double weyl_commutator_norm(const OscillatorSystem& system, const WeylSymbol& f,
                            const WeylSymbol& g, double t);

/// sup over t of weyl_commutator_norm. theta(t) is a sum of cluster
/// oscillations with amplitudes a_c; the supremum is 2 sin(min(sum a_c, pi) / 2).
double weyl_commutator_sup(const OscillatorSystem& system, const WeylSymbol& f,
                           const WeylSymbol& g);

enum class PqEntry { qq, qp, pq, pp };

PqEntry parse_pq_entry(std::string_view name);
const char* to_string(PqEntry entry) noexcept;
/// (row, column) position of the entry in a 2x2 matrix.
std::pair<int, int> matrix_position(PqEntry entry) noexcept;

/// A_{x,y}(t) = -i [[ [tau_t q_x, q_y], [tau_t q_x, p_y] ], [ [tau_t p_x, q_y], [tau_t p_x, p_y] ]].
/// At t = 0 this is delta_{xy} [[0, 1], [-1, 0]].
Eigen::Matrix2d pq_commutator_matrix(const OscillatorSystem& system, SiteIndex x, SiteIndex y,
                                     double t);

/// Entrywise sup over t of |A_{x,y}(t)|, from the mode amplitudes.
Eigen::Matrix2d pq_commutator_sup(const OscillatorSystem& system, SiteIndex x, SiteIndex y);

/// Entrywise max of |A_{x,y}(t)| over an evenly spaced grid on [0, t_max].
/// A lower bound for pq_commutator_sup; only useful as a sanity check.
Eigen::Matrix2d pq_commutator_scan(const OscillatorSystem& system, SiteIndex x, SiteIndex y,
                                   double t_max, int points);

}  // namespace oscloc
