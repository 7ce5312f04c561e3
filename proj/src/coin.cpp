#include "cqwalk/coin.hpp"

#include <cmath>
#include <string>

namespace cqw {

void validate_coin(const Coin2& h) {
    Eigen::Matrix2cd m = h.matrix();
    double err = (m * m.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
    if (err > kUnitaryTol)
        throw Error(errc::not_unitary, "HH^dag differs from I by " + std::to_string(err));
    for (Complex z : {h.a, h.b, h.c, h.d})
        if (std::abs(z) <= kNonzeroTol)
            throw Error(errc::zero_entry, "coin entries must all be nonzero");
}

CirculantCoin::CirculantCoin(int kappa, std::vector<Complex> weights)
    : kappa_(kappa), w_(std::move(weights)) {}

Eigen::MatrixXcd CirculantCoin::matrix() const {
    Eigen::MatrixXcd m(kappa_, kappa_);
    for (int i = 0; i < kappa_; ++i)
        for (int j = 0; j < kappa_; ++j) m(i, j) = entry(i, j);
    return m;
}

CirculantCoin circulant(const Coin2& h, int kappa) {
    validate_coin(h);
    if (kappa < 1) throw Error(errc::dimension_mismatch, "kappa must be >= 1");
    std::vector<Complex> w(static_cast<size_t>(kappa));
    if (kappa == 1) {
        w[0] = h.d + h.b * h.c / (1.0 - h.a);
    } else {
        Complex a_pow = std::pow(h.a, kappa);
        Complex factor = h.b * h.c / (1.0 - a_pow);
        w[0] = h.d + factor * std::pow(h.a, kappa - 1);
        for (int l = 1; l < kappa; ++l) w[static_cast<size_t>(l)] = factor * std::pow(h.a, l - 1);
    }
    return CirculantCoin(kappa, std::move(w));
}

const Coin2& CoinMap::at(VertexId u) const {
    if (u < 0 || u >= num_vertices())
        throw Error(errc::unknown_vertex, "vertex " + std::to_string(u));
    return coins_[static_cast<size_t>(u)];
}

CoinMap coin_assignment(const SymmetricDigraph& g, const CoinSpec& spec) {
    validate_coin(spec.default_coin);
    for (const auto& [u, h] : spec.overrides) {
        g.require_vertex(u);
        validate_coin(h);
    }
    std::vector<Coin2> coins(static_cast<size_t>(g.num_vertices()), spec.default_coin);
    for (const auto& [u, h] : spec.overrides) coins[static_cast<size_t>(u)] = h;
    return CoinMap(std::move(coins));
}

}  // namespace cqw
