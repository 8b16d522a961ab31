#include "lcasis/group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lcasis {

std::int64_t GroupSpec::order() const {
  std::int64_t n = 1;
  for (int m : moduli) n *= m;
  return n;
}

std::int64_t GroupSpec::index_of(const std::vector<int>& coords) const {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    idx = idx * moduli[i] + coords[i];
  }
  return idx;
}

std::vector<int> GroupSpec::coords_at(std::int64_t index) const {
  std::vector<int> coords(moduli.size());
  for (int i = dims() - 1; i >= 0; --i) {
    coords[i] = static_cast<int>(index % moduli[i]);
    index /= moduli[i];
  }
  return coords;
}

bool GroupSpec::valid_coords(const std::vector<int>& coords) const {
  if (coords.size() != moduli.size()) return false;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0 || coords[i] >= moduli[i]) return false;
  }
  return true;
}

std::vector<int> GroupSpec::add(const std::vector<int>& a,
                                const std::vector<int>& b) const {
  std::vector<int> out(moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    out[i] = (a[i] + b[i]) % moduli[i];
  }
  return out;
}

std::vector<int> GroupSpec::negate(const std::vector<int>& a) const {
  std::vector<int> out(moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    out[i] = a[i] == 0 ? 0 : moduli[i] - a[i];
  }
  return out;
}

bool LatticeSubgroup::contains_index(std::int64_t flat) const {
  return std::binary_search(element_index.begin(), element_index.end(), flat);
}

bool LatticeSubgroup::contains(const GroupElement& x) const {
  if (!parent.valid_coords(x.coords)) return false;
  return contains_index(parent.index_of(x.coords));
}

GroupSpec make_group(const std::vector<int>& moduli) {
  if (moduli.empty()) {
    throw std::invalid_argument("make_group: empty moduli list");
  }
  std::int64_t order = 1;
  for (int m : moduli) {
    if (m < 1) {
      throw std::invalid_argument("make_group: modulus must be >= 1");
    }
    // Desk-scale library: enumeration over |G| must stay tractable.
    if (order > (std::int64_t{1} << 40) / m) {
      throw std::invalid_argument("make_group: group order too large");
    }
    order *= m;
  }
  GroupSpec g;
  g.moduli = moduli;
  g.haar_weight = Rational(1, 1);  // placeholder until a lattice fixes it
  return g;
}

LatticeSubgroup subgroup_from_generators(const GroupSpec& group,
                                         const std::vector<GroupElement>& gens) {
  for (const auto& g : gens) {
    if (!group.valid_coords(g.coords)) {
      throw std::invalid_argument("subgroup_from_generators: generator out of range");
    }
  }
  const std::int64_t n = group.order();
  std::vector<char> member(static_cast<std::size_t>(n), 0);
  member[0] = 1;

  // Exhaustive closure: repeatedly add generators to known members.
  std::vector<std::int64_t> frontier = {0};
  while (!frontier.empty()) {
    std::vector<std::int64_t> next;
    for (std::int64_t idx : frontier) {
      const std::vector<int> x = group.coords_at(idx);
      for (const auto& g : gens) {
        const std::int64_t y = group.index_of(group.add(x, g.coords));
        if (!member[static_cast<std::size_t>(y)]) {
          member[static_cast<std::size_t>(y)] = 1;
          next.push_back(y);
        }
      }
    }
    frontier.swap(next);
  }

  LatticeSubgroup h;
  h.parent = group;
  h.generators = gens;
  for (std::int64_t idx = 0; idx < n; ++idx) {
    if (member[static_cast<std::size_t>(idx)]) {
      h.element_index.push_back(idx);
      h.elements.push_back(GroupElement{group.coords_at(idx)});
    }
  }
  if (n % h.size() != 0) {
    throw std::logic_error("subgroup_from_generators: order does not divide |G|");
  }
  return h;
}

namespace {

// Exact phase of (x, gamma) as a residue mod L = lcm(N_i):
// sum_i x_i * gamma_i * (L / N_i)  (mod L).
std::int64_t pairing_phase(const GroupSpec& group, const std::vector<int>& x,
                           const std::vector<int>& gamma, std::int64_t l) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < group.moduli.size(); ++i) {
    const std::int64_t term =
        static_cast<std::int64_t>(x[i]) * gamma[i] % group.moduli[i];
    acc = (acc + term * (l / group.moduli[i])) % l;
  }
  return acc;
}

std::int64_t moduli_lcm(const GroupSpec& group) {
  std::int64_t l = 1;
  for (int m : group.moduli) l = std::lcm(l, static_cast<std::int64_t>(m));
  return l;
}

}  // namespace

LatticeSubgroup annihilator(const GroupSpec& group, const LatticeSubgroup& h) {
  if (!h.parent.same_moduli(group)) {
    throw std::invalid_argument("annihilator: lattice does not live in the group");
  }
  GroupSpec dual = group;  // self-dual coordinate lattice
  dual.haar_weight = Rational(1, 1);

  // (., gamma) is a homomorphism on H, so testing the generators suffices;
  // fall back to all elements for subgroups not given by generators.
  const std::vector<GroupElement>& testers =
      h.generators.empty() ? h.elements : h.generators;

  const std::int64_t l = moduli_lcm(group);
  const std::int64_t n = group.order();
  LatticeSubgroup delta;
  delta.parent = dual;
  for (std::int64_t idx = 0; idx < n; ++idx) {
    const std::vector<int> gamma = dual.coords_at(idx);
    bool trivial = true;
    for (const auto& x : testers) {
      if (pairing_phase(group, x.coords, gamma, l) != 0) {
        trivial = false;
        break;
      }
    }
    if (trivial) {
      delta.element_index.push_back(idx);
      delta.elements.push_back(GroupElement{gamma});
    }
  }
  if (h.size() * delta.size() != n) {
    throw std::logic_error("annihilator: |H| * |Delta| != |G|");
  }
  return delta;
}

BorelSection section(const GroupSpec& gamma, const LatticeSubgroup& delta) {
  if (!delta.parent.same_moduli(gamma)) {
    throw std::invalid_argument("section: lattice does not live in the group");
  }
  const std::int64_t n = gamma.order();
  std::vector<char> covered(static_cast<std::size_t>(n), 0);

  BorelSection omega;
  // Scanning in row-major (= lexicographic) order makes every chosen
  // representative the smallest element of its coset.
  for (std::int64_t idx = 0; idx < n; ++idx) {
    if (covered[static_cast<std::size_t>(idx)]) continue;
    const std::vector<int> rep = gamma.coords_at(idx);
    omega.representatives.push_back(Character{rep});
    for (const auto& d : delta.elements) {
      const std::int64_t j = gamma.index_of(gamma.add(rep, d.coords));
      if (covered[static_cast<std::size_t>(j)]) {
        throw std::logic_error("section: coset visited twice");
      }
      covered[static_cast<std::size_t>(j)] = 1;
    }
  }
  omega.weight = Rational(delta.size(), n);
  if (omega.weight * omega.size() != Rational(1)) {
    throw std::logic_error("section: |Omega| * weight != 1");
  }
  return omega;
}

HaarSystem haar_system(const GroupSpec& group, const LatticeSubgroup& h) {
  if (!h.parent.same_moduli(group)) {
    throw std::invalid_argument("haar_system: lattice does not live in the group");
  }
  const std::int64_t n = group.order();
  HaarSystem haar;
  haar.w_Gamma = Rational(1, h.size());
  haar.w_G = Rational(h.size(), n);

  // The two inversion constraints are simultaneously satisfiable for finite
  // groups; assert rather than assume.
  if (haar.w_G * haar.w_Gamma * n != Rational(1)) {
    throw std::logic_error("haar_system: inversion pairing violated");
  }
  if (Rational(1, h.size()) * h.size() != Rational(1)) {
    throw std::logic_error("haar_system: H / quotient inversion violated");
  }
  return haar;
}

std::complex<double> character_eval(const GroupSpec& group,
                                    const GroupElement& x,
                                    const Character& gamma) {
  if (x.coords.size() != group.moduli.size() ||
      gamma.coords.size() != group.moduli.size()) {
    throw std::invalid_argument("character_eval: dimension mismatch");
  }
  const std::int64_t l = moduli_lcm(group);
  const std::int64_t r = pairing_phase(group, x.coords, gamma.coords, l);
  if (r == 0) return {1.0, 0.0};
  return std::polar(1.0, 2.0 * M_PI * static_cast<double>(r) /
                             static_cast<double>(l));
}

}  // namespace lcasis
