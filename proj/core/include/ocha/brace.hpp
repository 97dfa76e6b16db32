#pragma once

#include "ocha/cochain.hpp"

#include <span>
#include <vector>

namespace ocha {

/// Deliberate sign corruptions, used only by mutation tests and the
/// campaign's self-check mode.
enum class Mutation {
  none,
  /// Drops the |x_K1| |y_L2| term from the sign of the single brace D{E}.
  gerstenhaber_prefix_sign,
};

struct BraceOptions {
  ArityCap cap{};
  Mutation mutation = Mutation::none;
};

/// Closed-string action of l on D:
///   l^(D)(y_[l]; x) = sum (-1)^eps D(l(y_J1) ^ y_J2; x)
/// over [l] = J1 |_| J2 with J1 nonempty and y_[l] = (-1)^eps y_J1 ^ y_J2.
/// Raises the shifted degree by |l|.
OCCochain hat_action(const SymCochain& l, const OCCochain& d, const ArityCap& cap = {});

/// Higher open-closed brace D{E_1, ..., E_m}. Every E_j is inserted into an
/// open slot of D (order preserved) and closed inputs are distributed over
/// D and the E_j with the Koszul sign. D{} = D.
OCCochain brace(const OCCochain& d, std::span<const OCCochain> es, const BraceOptions& opts = {});

/// D{E}, the m = 1 brace.
OCCochain gerstenhaber_product(const OCCochain& d, const OCCochain& e,
                               const BraceOptions& opts = {});

/// Graded symmetric composition k2 . k1, summed over unordered partitions
/// of the inputs into nonempty blocks.
SymCochain sym_compose(const SymCochain& k2, const SymCochain& k1, int max_l = INT_MAX);

/// Symmetric brace l<k_1, ..., k_n>; l<> = l. The k_i are endomorphism
/// families of l's source; l itself may land in another space.
SymCochain sym_brace(const SymCochain& l, std::span<const SymCochain> ks, int max_l = INT_MAX);

/// Composition of open-only maps  m'(f(x_I1), ..., f(x_Ir))  summed over
/// dotted partitions into nonempty blocks (left side of the A-infinity
/// morphism equation). Both arguments must have l = 0 only.
OCCochain a_infinity_compose(const OCCochain& m_target, const OCCochain& f);

}  // namespace ocha
