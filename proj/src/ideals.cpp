#include "gsr/ideals.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace gsr {

std::string IdealKind::to_string() const {
  switch (tag) {
    case Tag::Left: return "left";
    case Tag::Right: return "right";
    case Tag::TwoSided: return "two_sided";
    case Tag::Positional: {
      std::ostringstream os;
      os << "positional{";
      bool first = true;
      for (int i = 0; i < 32; ++i)
        if (mask_has(slots, i)) {
          if (!first) os << ',';
          os << (i + 1);
          first = false;
        }
      os << '}';
      return os.str();
    }
    case Tag::Threshold: {
      std::ostringstream os;
      os << "threshold(" << level << ')';
      return os.str();
    }
  }
  return "?";
}

bool IdealSubset::has_kind(const IdealKind& k) const {
  return std::binary_search(kinds.begin(), kinds.end(), k);
}

void IdealSubset::tag_kind(const IdealKind& k) {
  auto it = std::lower_bound(kinds.begin(), kinds.end(), k);
  if (it == kinds.end() || *it != k) kinds.insert(it, k);
}

bool additively_closed_with_zero(const GammaSemiring& s, Mask subset) {
  if (!mask_has(subset, 0)) return false;
  for (int i = 0; i < s.m; ++i) {
    if (!mask_has(subset, i)) continue;
    for (int j = i; j < s.m; ++j)
      if (mask_has(subset, j) && !mask_has(subset, s.add_at(i, j))) return false;
  }
  return true;
}

Mask additive_closure(const GammaSemiring& s, Mask subset) {
  Mask cur = subset | 1u;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < s.m; ++i) {
      if (!mask_has(cur, i)) continue;
      for (int j = i; j < s.m; ++j) {
        if (!mask_has(cur, j)) continue;
        int v = s.add_at(i, j);
        if (!mask_has(cur, v)) {
          cur |= Mask{1} << v;
          grew = true;
        }
      }
    }
  }
  return cur;
}

namespace {

bool positional_absorbs(const GammaSemiring& s, Mask subset, Mask slots) {
  const std::size_t gt = s.gamma_tuple_count();
  const std::size_t cells = s.mu_table_size();
  for (std::size_t cell = 0; cell < cells; ++cell) {
    auto args = decode_args(s, cell);
    bool constrained = true;
    for (int i = 0; i < s.n && constrained; ++i)
      if (mask_has(slots, i) && !mask_has(subset, args[static_cast<std::size_t>(i)])) constrained = false;
    if (!constrained) continue;
    for (std::size_t g = 0; g < gt; ++g)
      if (!mask_has(subset, s.mu_at(g, cell))) return false;
  }
  return true;
}

bool threshold_absorbs(const GammaSemiring& s, Mask subset, int t) {
  const std::size_t gt = s.gamma_tuple_count();
  const std::size_t cells = s.mu_table_size();
  for (std::size_t cell = 0; cell < cells; ++cell) {
    auto args = decode_args(s, cell);
    int inside = 0;
    for (int a : args)
      if (mask_has(subset, a)) ++inside;
    if (inside < t) continue;
    for (std::size_t g = 0; g < gt; ++g)
      if (!mask_has(subset, s.mu_at(g, cell))) return false;
  }
  return true;
}

Mask left_slots(const GammaSemiring&) { return Mask{1} << 1; }
Mask right_slots(const GammaSemiring& s) { return Mask{1} << (s.n - 1); }

}  // namespace

bool is_ideal(const GammaSemiring& s, Mask subset, const IdealKind& kind) {
  if (!additively_closed_with_zero(s, subset)) return false;
  switch (kind.tag) {
    case IdealKind::Tag::Left: return positional_absorbs(s, subset, left_slots(s));
    case IdealKind::Tag::Right: return positional_absorbs(s, subset, right_slots(s));
    case IdealKind::Tag::TwoSided:
      return positional_absorbs(s, subset, left_slots(s)) &&
             positional_absorbs(s, subset, right_slots(s));
    case IdealKind::Tag::Positional:
      if (kind.slots == 0 || (kind.slots >> s.n) != 0) throw UsageError("positional slot set out of range");
      return positional_absorbs(s, subset, kind.slots);
    case IdealKind::Tag::Threshold:
      if (kind.level < 1 || kind.level > s.n) throw UsageError("threshold out of range");
      return threshold_absorbs(s, subset, kind.level);
  }
  return false;
}

std::vector<IdealSubset> all_ideals(const GammaSemiring& s, const IdealKind& kind,
                                    int carrier_limit) {
  if (s.m > carrier_limit) throw CapacityError("carrier exceeds the subset scan limit");
  // Every additively closed subset containing 0 is the closure of its own
  // nonzero part, so closures of atom subsets cover them all.
  std::set<Mask> closed;
  const Mask atoms = full_mask(s.m) & ~Mask{1};
  for (Mask sub = 0;; sub = (sub - atoms) & atoms) {
    closed.insert(additive_closure(s, sub | 1u));
    if (sub == atoms) break;
  }
  std::vector<IdealSubset> out;
  for (Mask bits : closed)
    if (is_ideal(s, bits, kind)) out.push_back({bits, {kind}});
  return out;
}

IdealSubset generated_ideal(const GammaSemiring& s, Mask seed, const IdealKind& kind) {
  if (seed == 0) throw UsageError("generated_ideal requires a nonempty seed");
  Mask cur = seed | 1u;
  const std::size_t gt = s.gamma_tuple_count();
  const std::size_t cells = s.mu_table_size();
  bool grew = true;
  while (grew) {
    grew = false;
    Mask next = additive_closure(s, cur);
    for (std::size_t cell = 0; cell < cells; ++cell) {
      auto args = decode_args(s, cell);
      bool absorbed = false;
      switch (kind.tag) {
        case IdealKind::Tag::Left:
          absorbed = mask_has(cur, args[1]);
          break;
        case IdealKind::Tag::Right:
          absorbed = mask_has(cur, args[static_cast<std::size_t>(s.n - 1)]);
          break;
        case IdealKind::Tag::TwoSided:
          absorbed = mask_has(cur, args[1]) || mask_has(cur, args[static_cast<std::size_t>(s.n - 1)]);
          break;
        case IdealKind::Tag::Positional: {
          if (kind.slots == 0 || (kind.slots >> s.n) != 0) throw UsageError("positional slot set out of range");
          absorbed = true;
          for (int i = 0; i < s.n && absorbed; ++i)
            if (mask_has(kind.slots, i) && !mask_has(cur, args[static_cast<std::size_t>(i)])) absorbed = false;
          break;
        }
        case IdealKind::Tag::Threshold: {
          if (kind.level < 1 || kind.level > s.n) throw UsageError("threshold out of range");
          int inside = 0;
          for (int a : args)
            if (mask_has(cur, a)) ++inside;
          absorbed = inside >= kind.level;
          break;
        }
      }
      if (!absorbed) continue;
      for (std::size_t g = 0; g < gt; ++g) next |= Mask{1} << s.mu_at(g, cell);
    }
    if (next != cur) {
      cur = next;
      grew = true;
    }
  }
  IdealSubset out{cur, {}};
  out.tag_kind(kind);
  return out;
}

namespace {

std::vector<IdealKind> common_kinds(const IdealSubset& a, const IdealSubset& b) {
  std::vector<IdealKind> out;
  std::set_intersection(a.kinds.begin(), a.kinds.end(), b.kinds.begin(), b.kinds.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace

IdealSubset sum_ideals(const GammaSemiring& s, const IdealSubset& a, const IdealSubset& b) {
  auto shared = common_kinds(a, b);
  if (shared.empty()) throw UsageError("sum_ideals operands share no verified kind");
  Mask bits = 0;
  for (int x = 0; x < s.m; ++x) {
    if (!mask_has(a.bits, x)) continue;
    for (int y = 0; y < s.m; ++y)
      if (mask_has(b.bits, y)) bits |= Mask{1} << s.add_at(x, y);
  }
  IdealSubset out{bits, {}};
  for (const auto& k : shared)
    if (is_ideal(s, bits, k)) out.tag_kind(k);
  return out;
}

IdealSubset intersect_ideals(const GammaSemiring& s, const std::vector<IdealSubset>& family) {
  if (family.empty()) throw UsageError("intersect_ideals requires a nonempty family");
  std::vector<IdealKind> shared = family[0].kinds;
  Mask bits = family[0].bits;
  for (std::size_t i = 1; i < family.size(); ++i) {
    shared = common_kinds({0, shared}, family[i]);
    bits &= family[i].bits;
  }
  if (shared.empty()) throw UsageError("intersect_ideals operands share no verified kind");
  IdealSubset out{bits, {}};
  for (const auto& k : shared)
    if (is_ideal(s, bits, k)) out.tag_kind(k);
  return out;
}

ThresholdIndex tau(const GammaSemiring& s, Mask subset) {
  if (!additively_closed_with_zero(s, subset)) return {std::nullopt, false};
  for (int t = 1; t <= s.n; ++t)
    if (threshold_absorbs(s, subset, t)) return {t, true};
  return {std::nullopt, true};
}

PositionalDecomposition positional_decomposition_check(const GammaSemiring& s, Mask ideal, int t) {
  if (t < 1 || t > s.n) throw UsageError("threshold out of range");
  if (!is_ideal(s, ideal, IdealKind::threshold(t)))
    throw UsageError("positional_decomposition_check requires a Threshold(t) ideal");
  PositionalDecomposition out;
  out.intersection = full_mask(s.m);
  for (Mask slots = 1; slots < (Mask{1} << s.n); ++slots) {
    if (std::popcount(slots) != t) continue;
    Mask ext = generated_ideal(s, ideal, IdealKind::positional(slots)).bits;
    out.family.emplace_back(slots, ext);
    out.intersection &= ext;
  }
  out.equal = out.intersection == ideal;
  return out;
}

std::vector<AuditEntry> ideal_lattice_audit(const GammaSemiring& s) {
  std::vector<AuditEntry> entries;
  std::vector<IdealKind> kinds{IdealKind::left(), IdealKind::right(), IdealKind::two_sided()};
  for (Mask slots = 1; slots < (Mask{1} << s.n); ++slots) kinds.push_back(IdealKind::positional(slots));
  for (int t = 1; t <= s.n; ++t) kinds.push_back(IdealKind::threshold(t));

  for (const auto& kind : kinds) {
    auto ideals = all_ideals(s, kind);
    std::string sum_witness, int_witness;
    for (std::size_t i = 0; i < ideals.size() && sum_witness.empty(); ++i)
      for (std::size_t j = i; j < ideals.size() && sum_witness.empty(); ++j) {
        auto sum = sum_ideals(s, ideals[i], ideals[j]);
        if (!sum.has_kind(kind)) {
          std::ostringstream os;
          os << mask_to_string(ideals[i].bits, s.m) << " + " << mask_to_string(ideals[j].bits, s.m)
             << " = " << mask_to_string(sum.bits, s.m) << " drops " << kind.to_string();
          sum_witness = os.str();
        }
      }
    for (std::size_t i = 0; i < ideals.size() && int_witness.empty(); ++i)
      for (std::size_t j = i; j < ideals.size() && int_witness.empty(); ++j) {
        auto meet = intersect_ideals(s, {ideals[i], ideals[j]});
        if (!meet.has_kind(kind)) {
          std::ostringstream os;
          os << mask_to_string(ideals[i].bits, s.m) << " meet " << mask_to_string(ideals[j].bits, s.m)
             << " = " << mask_to_string(meet.bits, s.m) << " drops " << kind.to_string();
          int_witness = os.str();
        }
      }
    entries.push_back(sum_witness.empty() ? audit_pass("ideal-sum-closure", kind.to_string())
                                          : audit_fail("ideal-sum-closure", kind.to_string(), sum_witness));
    entries.push_back(int_witness.empty()
                          ? audit_pass("ideal-intersection-closure", kind.to_string())
                          : audit_fail("ideal-intersection-closure", kind.to_string(), int_witness));
  }

  {
    // Once a threshold passes, every larger threshold must pass.
    std::string witness;
    std::set<Mask> closed;
    const Mask atoms = full_mask(s.m) & ~Mask{1};
    for (Mask sub = 0;; sub = (sub - atoms) & atoms) {
      closed.insert(additive_closure(s, sub | 1u));
      if (sub == atoms) break;
    }
    for (Mask bits : closed) {
      bool passed = false;
      for (int t = 1; t <= s.n && witness.empty(); ++t) {
        bool now = is_ideal(s, bits, IdealKind::threshold(t));
        if (passed && !now) {
          std::ostringstream os;
          os << mask_to_string(bits, s.m) << " passes threshold " << (t - 1) << " but not " << t;
          witness = os.str();
        }
        passed = passed || now;
      }
      if (!witness.empty()) break;
    }
    entries.push_back(witness.empty() ? audit_pass("threshold-hierarchy", "additively closed subsets")
                                      : audit_fail("threshold-hierarchy", "additively closed subsets", witness));
  }

  {
    // Claimed: tau is monotone along inclusions of two-sided ideals.
    auto ideals = all_ideals(s, IdealKind::two_sided());
    std::string witness;
    for (std::size_t i = 0; i < ideals.size() && witness.empty(); ++i)
      for (std::size_t j = 0; j < ideals.size() && witness.empty(); ++j) {
        if (i == j) continue;
        if ((ideals[i].bits & ideals[j].bits) != ideals[i].bits) continue;  // need i subseteq j
        auto ti = tau(s, ideals[i].bits);
        auto tj = tau(s, ideals[j].bits);
        long vi = ti.value ? *ti.value : (s.n + 1);
        long vj = tj.value ? *tj.value : (s.n + 1);
        if (vj < vi) {
          std::ostringstream os;
          os << "tau(" << mask_to_string(ideals[j].bits, s.m) << ")=" << vj << " < tau("
             << mask_to_string(ideals[i].bits, s.m) << ")=" << vi;
          witness = os.str();
        }
      }
    entries.push_back(witness.empty() ? audit_pass("threshold-monotonicity", "two-sided pairs")
                                      : audit_fail("threshold-monotonicity", "two-sided pairs", witness));
  }

  return entries;
}

}  // namespace gsr
