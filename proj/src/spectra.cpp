#include "gsr/spectra.hpp"

#include <algorithm>
#include <sstream>

namespace gsr {

namespace {

std::string side_name(Side side) {
  switch (side) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::Two: return "two_sided";
  }
  return "?";
}

std::string points_str(const GammaSemiring& s, const std::vector<std::size_t>& idx,
                       const Spectrum& spec) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) os << ',';
    os << mask_to_string(spec.points[idx[i]].bits, s.m);
  }
  os << '}';
  return os.str();
}

}  // namespace

Spectrum spectrum(const GammaSemiring& s, Side side) {
  Spectrum out{side, {}};
  for (Mask p : side_primes(s, side)) {
    IdealSubset ideal{p, {}};
    ideal.tag_kind(kind_for_side(side));
    out.points.push_back(ideal);
  }
  return out;
}

ClosedSet vanishing_set(const Spectrum& spec, Mask a_set) {
  ClosedSet out{a_set, {}};
  for (std::size_t i = 0; i < spec.points.size(); ++i)
    if ((a_set & ~spec.points[i].bits) == 0) out.points.push_back(i);
  return out;
}

std::vector<std::size_t> basic_open(const Spectrum& spec, Element a) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < spec.points.size(); ++i)
    if (!mask_has(spec.points[i].bits, a)) out.push_back(i);
  return out;
}

std::vector<AuditEntry> verify_zariski_axioms(const GammaSemiring& s, Side side) {
  std::vector<AuditEntry> out;
  const std::string ctx = side_name(side);
  Spectrum spec = spectrum(s, side);
  const Mask carrier = full_mask(s.m);

  {
    bool zero_all = vanishing_set(spec, 1).points.size() == spec.points.size();
    bool full_empty = vanishing_set(spec, carrier).points.empty();
    out.push_back(zero_all && full_empty
                      ? audit_pass("zariski-empty-full", ctx)
                      : audit_fail("zariski-empty-full", ctx,
                                   zero_all ? "V(T) is nonempty" : "V({0}) misses a point"));
  }

  {
    std::string witness;
    for (Mask a = 0; a <= carrier && witness.empty(); ++a)
      for (Mask b = a; b <= carrier && witness.empty(); ++b) {
        auto va = vanishing_set(spec, a).points;
        auto vb = vanishing_set(spec, b).points;
        std::vector<std::size_t> meet;
        std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                              std::back_inserter(meet));
        if (meet != vanishing_set(spec, a | b).points)
          witness = "A=" + mask_to_string(a, s.m) + " B=" + mask_to_string(b, s.m);
      }
    out.push_back(witness.empty() ? audit_pass("zariski-pair-intersection", ctx)
                                  : audit_fail("zariski-pair-intersection", ctx, witness));
  }

  {
    auto ideals = all_ideals(s, kind_for_side(side));
    std::string witness;
    for (std::size_t i = 0; i < ideals.size() && witness.empty(); ++i)
      for (std::size_t j = i; j < ideals.size() && witness.empty(); ++j) {
        auto vi = vanishing_set(spec, ideals[i].bits).points;
        auto vj = vanishing_set(spec, ideals[j].bits).points;
        std::vector<std::size_t> join;
        std::set_union(vi.begin(), vi.end(), vj.begin(), vj.end(), std::back_inserter(join));
        auto meet_set = vanishing_set(spec, ideals[i].bits & ideals[j].bits).points;
        if (join != meet_set) {
          std::ostringstream os;
          os << "I=" << mask_to_string(ideals[i].bits, s.m)
             << " J=" << mask_to_string(ideals[j].bits, s.m) << " V(I)uV(J)="
             << points_str(s, join, spec) << " V(I^J)=" << points_str(s, meet_set, spec);
          witness = os.str();
        }
      }
    out.push_back(witness.empty() ? audit_pass("zariski-finite-union", ctx)
                                  : audit_fail("zariski-finite-union", ctx, witness));
  }

  {
    std::string witness;
    for (const auto& ideal : all_ideals(s, kind_for_side(side))) {
      auto rad = prime_radical(s, ideal.bits, side);
      if (vanishing_set(spec, ideal.bits).points != vanishing_set(spec, rad.bits).points) {
        witness = "I=" + mask_to_string(ideal.bits, s.m) +
                  " radical=" + mask_to_string(rad.bits, s.m);
        break;
      }
    }
    out.push_back(witness.empty() ? audit_pass("zariski-radical-invariance", ctx)
                                  : audit_fail("zariski-radical-invariance", ctx, witness));
  }

  {
    std::string witness;
    for (std::size_t i = 0; i < spec.points.size() && witness.empty(); ++i)
      for (std::size_t j = i + 1; j < spec.points.size() && witness.empty(); ++j) {
        bool separated = false;
        for (int a = 0; a < s.m && !separated; ++a) {
          bool ia = mask_has(spec.points[i].bits, a);
          bool ja = mask_has(spec.points[j].bits, a);
          separated = ia != ja;
        }
        if (!separated)
          witness = mask_to_string(spec.points[i].bits, s.m) + " vs " +
                    mask_to_string(spec.points[j].bits, s.m);
      }
    out.push_back(witness.empty() ? audit_pass("zariski-t0", ctx)
                                  : audit_fail("zariski-t0", ctx, witness));
  }

  return out;
}

PullbackResult pullback_map(const Homomorphism& f, Side side) {
  Mask image = 0;
  for (Element v : f.map) image |= Mask{1} << v;
  if (image != full_mask(f.target.m)) throw UsageError("pullback_map requires a surjective map");

  PullbackResult out;
  Spectrum src = spectrum(f.source, side);
  Spectrum tgt = spectrum(f.target, side);

  std::string land_witness;
  for (const auto& p : tgt.points) {
    Mask pb = pullback_ideal(f, p.bits);
    out.map.emplace_back(p.bits, pb);
    bool found = false;
    for (const auto& q : src.points) found = found || q.bits == pb;
    if (!found && land_witness.empty())
      land_witness = "pullback of " + mask_to_string(p.bits, f.target.m) + " is " +
                     mask_to_string(pb, f.source.m);
  }
  out.audits.push_back(land_witness.empty()
                           ? audit_pass("pullback-lands-in-spectrum", side_name(side))
                           : audit_fail("pullback-lands-in-spectrum", side_name(side), land_witness));

  std::string cont_witness;
  for (Mask a = 0; a <= full_mask(f.source.m) && cont_witness.empty(); ++a) {
    // Preimage of V_src(A) under the pullback map, as target point indices.
    auto v_src = vanishing_set(src, a).points;
    std::vector<std::size_t> preimage;
    for (std::size_t t = 0; t < tgt.points.size(); ++t) {
      Mask pb = out.map[t].second;
      for (std::size_t si : v_src)
        if (src.points[si].bits == pb) {
          preimage.push_back(t);
          break;
        }
    }
    Mask pushed = 0;
    for (int x = 0; x < f.source.m; ++x)
      if (mask_has(a, x)) pushed |= Mask{1} << f.map[static_cast<std::size_t>(x)];
    if (preimage != vanishing_set(tgt, pushed).points)
      cont_witness = "A=" + mask_to_string(a, f.source.m);
  }
  out.audits.push_back(cont_witness.empty()
                           ? audit_pass("pullback-continuity", side_name(side))
                           : audit_fail("pullback-continuity", side_name(side), cont_witness));

  return out;
}

SpecializationReport specialization_and_components(const Spectrum& spec) {
  SpecializationReport out;
  const std::size_t k = spec.points.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if ((spec.points[i].bits & ~spec.points[j].bits) == 0) out.order.emplace_back(i, j);
  for (std::size_t i = 0; i < k; ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < k && minimal; ++j)
      if (j != i && (spec.points[j].bits & ~spec.points[i].bits) == 0) minimal = false;
    if (minimal) out.minimal_points.push_back(i);
  }
  for (std::size_t i : out.minimal_points)
    out.components.push_back(vanishing_set(spec, spec.points[i].bits).points);
  return out;
}

DiscretenessReport discreteness_check(const GammaSemiring& s) {
  DiscretenessReport out;
  auto jac = jacobson_radical(s, Side::Two);
  out.jacobson_empty_family = jac.empty_family;
  out.jacobson_zero = !jac.empty_family && jac.bits == 1;
  Spectrum spec = spectrum(s, Side::Two);

  // A point is isolated when its complement is a vanishing set.
  std::vector<bool> isolated(spec.points.size(), false);
  for (Mask a = 0; a <= full_mask(s.m); ++a) {
    auto v = vanishing_set(spec, a).points;
    if (v.size() + 1 != spec.points.size()) continue;
    std::vector<bool> present(spec.points.size(), false);
    for (std::size_t i : v) present[i] = true;
    for (std::size_t i = 0; i < spec.points.size(); ++i)
      if (!present[i]) isolated[i] = true;
  }
  out.discrete_topology = true;
  for (std::size_t i = 0; i < spec.points.size(); ++i) {
    if (isolated[i])
      out.isolated.push_back(spec.points[i].bits);
    else
      out.discrete_topology = false;
  }
  if (spec.points.empty() && jac.empty_family) {
    out.biconditional = audit_vacuous("discreteness-biconditional",
                                      "empty spectrum, empty modular maximal family");
  } else if (out.jacobson_zero == out.discrete_topology) {
    out.biconditional = audit_pass("discreteness-biconditional", "two_sided");
  } else {
    std::ostringstream os;
    os << "jacobson=" << mask_to_string(jac.bits, s.m)
       << (jac.empty_family ? " (empty family)" : "") << " discrete="
       << (out.discrete_topology ? "true" : "false");
    out.biconditional = audit_fail("discreteness-biconditional", "two_sided", os.str());
  }
  return out;
}

}  // namespace gsr
