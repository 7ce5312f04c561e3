#pragma once

// 2x2 unitary coins and the deg(u) x deg(u) circulant scattering matrices
// they induce. Entry (i,j) of Circ(H) is w_{(i-j) mod kappa} with
//   w_0 = d + bc a^{kappa-1} / (1 - a^kappa),
//   w_l = bc a^{l-1} / (1 - a^kappa)   (l = 1..kappa-1).

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <vector>

#include "cqwalk/error.hpp"
#include "cqwalk/graph.hpp"

namespace cqw {

using Complex = std::complex<double>;

inline constexpr double kUnitaryTol = 1e-10;  // max entry of HH^dag - I
inline constexpr double kNonzeroTol = 1e-12;  // minimum entry modulus

struct Coin2 {
    Complex a, b, c, d;  // row-major entries of H

    Eigen::Matrix2cd matrix() const {
        Eigen::Matrix2cd m;
        m << a, b, c, d;
        return m;
    }
    Complex det() const { return a * d - b * c; }
};

// ok iff H is unitary (within kUnitaryTol) and all four entries are nonzero
// (Assumption on nontrivial dynamics). Throws not_unitary / zero_entry.
void validate_coin(const Coin2& h);

class CirculantCoin {
public:
    CirculantCoin(int kappa, std::vector<Complex> weights);

    int kappa() const { return kappa_; }
    const std::vector<Complex>& weights() const { return w_; }
    Complex entry(int i, int j) const {
        int l = (i - j) % kappa_;
        return w_[static_cast<size_t>(l < 0 ? l + kappa_ : l)];
    }
    Eigen::MatrixXcd matrix() const;

private:
    int kappa_;
    std::vector<Complex> w_;
};

// Circulant coin of H at degree kappa, computed from the closed-form weights.
CirculantCoin circulant(const Coin2& h, int kappa);

struct CoinSpec {
    Coin2 default_coin;
    std::map<VertexId, Coin2> overrides;
};

// Total assignment of coins over the internal vertices.
class CoinMap {
public:
    explicit CoinMap(std::vector<Coin2> coins) : coins_(std::move(coins)) {}

    const Coin2& at(VertexId u) const;
    int num_vertices() const { return static_cast<int>(coins_.size()); }

private:
    std::vector<Coin2> coins_;
};

// Validates every coin and checks override vertices exist.
CoinMap coin_assignment(const SymmetricDigraph& g, const CoinSpec& spec);

}  // namespace cqw
