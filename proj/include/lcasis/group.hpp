#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "lcasis/rational.hpp"

namespace lcasis {

struct GroupElement;
struct Character;

/// A finite abelian group G = Z_{N1} x ... x Z_{Nd} with a Haar weight
/// (the mass of a singleton under m_G). The dual group shares the same
/// coordinate lattice; the pairing is
///   (x, gamma) = exp(2*pi*i * sum_i x_i * gamma_i / N_i).
struct GroupSpec {
  std::vector<int> moduli;
  Rational haar_weight{1, 1};

  int dims() const { return static_cast<int>(moduli.size()); }
  std::int64_t order() const;
  bool same_moduli(const GroupSpec& other) const {
    return moduli == other.moduli;
  }

  /// Row-major flat index of a coordinate tuple.
  std::int64_t index_of(const std::vector<int>& coords) const;
  std::vector<int> coords_at(std::int64_t index) const;

  bool valid_coords(const std::vector<int>& coords) const;
  std::vector<int> add(const std::vector<int>& a,
                       const std::vector<int>& b) const;
  std::vector<int> negate(const std::vector<int>& a) const;
};

struct GroupElement {
  std::vector<int> coords;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.coords == b.coords;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) {
    return !(a == b);
  }
};

/// A character of the group, identified with its coordinate tuple in the
/// dual lattice (finite abelian groups are self-dual).
struct Character {
  std::vector<int> coords;

  friend bool operator==(const Character& a, const Character& b) {
    return a.coords == b.coords;
  }
};

/// A subgroup of a finite group with fully enumerated elements. Every
/// subgroup of a finite group is a uniform lattice; the same type also
/// houses annihilators on the dual side.
struct LatticeSubgroup {
  GroupSpec parent;
  std::vector<GroupElement> generators;
  std::vector<GroupElement> elements;      // sorted by row-major index
  std::vector<std::int64_t> element_index; // flat indices, same order

  std::int64_t size() const { return static_cast<std::int64_t>(elements.size()); }
  std::int64_t index() const { return parent.order() / size(); }
  bool contains(const GroupElement& x) const;
  bool contains_index(std::int64_t flat) const;
};

/// A set of coset representatives of Delta in Gamma, one per coset, along
/// with the singleton mass of m_Gamma. The representatives cover all cosets
/// and satisfy |Omega| * weight = 1.
struct BorelSection {
  std::vector<Character> representatives;
  Rational weight{1, 1};

  std::int64_t size() const {
    return static_cast<std::int64_t>(representatives.size());
  }
};

/// Normalized Haar weights: counting measure on H and Delta
/// (m_H({0}) = m_Delta({0}) = 1), total mass 1 on the quotient, and
/// w_G, w_Gamma fixed by the inversion formula. Stored exactly.
struct HaarSystem {
  Rational w_G{1, 1};
  Rational w_Gamma{1, 1};
  // w_H = w_Delta = 1 by normalization.
};

GroupSpec make_group(const std::vector<int>& moduli);

/// Smallest subgroup containing the generators, enumerated by exhaustive
/// closure. Throws if a generator is out of range.
LatticeSubgroup subgroup_from_generators(const GroupSpec& group,
                                         const std::vector<GroupElement>& gens);

/// Annihilator of H in the dual group: all characters trivial on H.
/// Satisfies |H| * |Delta| = |G|.
LatticeSubgroup annihilator(const GroupSpec& group, const LatticeSubgroup& h);

/// Section of Gamma/Delta with the lexicographically smallest representative
/// per coset; weight set so the section has total mass 1.
BorelSection section(const GroupSpec& gamma, const LatticeSubgroup& delta);

/// Solves the normalization constraints for (G, H) exactly:
/// w_Gamma = 1/|H|, w_G = |H|/|G|. Verifies the inversion pairing
/// w_G * w_Gamma * |G| = 1 rather than assuming it.
HaarSystem haar_system(const GroupSpec& group, const LatticeSubgroup& h);

/// Pairing (x, gamma) = exp(2*pi*i * sum_i x_i*gamma_i / N_i), computed with
/// exact integer phase reduction so it has modulus 1 up to floating error.
std::complex<double> character_eval(const GroupSpec& group,
                                    const GroupElement& x,
                                    const Character& gamma);

}  // namespace lcasis
