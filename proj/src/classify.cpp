#include "gsr/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "gsr/io.hpp"

namespace gsr {

namespace {

std::vector<Element> table_key(const GammaSemiring& s) {
  std::vector<Element> key;
  key.reserve(s.add.cells.size() + s.gamma_tuple_count() * s.mu_table_size());
  key.insert(key.end(), s.add.cells.begin(), s.add.cells.end());
  for (const auto& row : s.mu) key.insert(key.end(), row.begin(), row.end());
  return key;
}

// Reindexes mu rows by a permutation of the gamma alphabet; cell contents
// are untouched.
GammaSemiring gamma_relabel(const GammaSemiring& s, const std::vector<int>& q) {
  GammaSemiring out = s;
  const std::size_t gcount = s.gamma_tuple_count();
  for (std::size_t g = 0; g < gcount; ++g) {
    std::vector<int> digits = decode_gamma(s, g);
    std::size_t target = 0;
    for (int d : digits) target = target * s.r + q[d];
    out.mu[target] = s.mu[g];
  }
  return out;
}

std::vector<std::vector<int>> element_perms(int m) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

std::vector<std::vector<int>> gamma_perms(int r, bool enabled) {
  std::vector<int> q(r);
  std::iota(q.begin(), q.end(), 0);
  if (!enabled) return {q};
  std::vector<std::vector<int>> out;
  do {
    out.push_back(q);
  } while (std::next_permutation(q.begin(), q.end()));
  return out;
}

bool same_shape(const GammaSemiring& a, const GammaSemiring& b) {
  return a.m == b.m && a.n == b.n && a.r == b.r && a.assoc_mode == b.assoc_mode;
}

std::string shape_note(const GammaSemiring& a, const GammaSemiring& b) {
  std::ostringstream os;
  os << "shape mismatch: (m=" << a.m << ",n=" << a.n << ",r=" << a.r
     << ") vs (m=" << b.m << ",n=" << b.n << ",r=" << b.r << ")";
  if (a.assoc_mode != b.assoc_mode) os << " with differing associativity modes";
  return os.str();
}

bool witness_matches(const GammaSemiring& a, const GammaSemiring& b,
                     const std::vector<int>& f, const std::vector<int>& q) {
  return gamma_relabel(relabel(a, f), q) == b;
}

// Complete bijection scan, the collision fallback. Returns the element map
// and gamma permutation of the first match in scan order.
std::optional<std::pair<std::vector<int>, std::vector<int>>> exhaustive_iso(
    const GammaSemiring& a, const GammaSemiring& b, bool permute_gamma) {
  if (!same_shape(a, b)) return std::nullopt;
  for (const auto& f : element_perms(a.m)) {
    for (const auto& q : gamma_perms(a.r, permute_gamma)) {
      if (witness_matches(a, b, f, q)) return std::make_pair(f, q);
    }
  }
  return std::nullopt;
}

Homomorphism make_witness(const GammaSemiring& a, const GammaSemiring& b,
                          const std::vector<int>& f) {
  Homomorphism h;
  h.source = a;
  h.target = b;
  h.map.resize(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) h.map[i] = static_cast<Element>(f[i]);
  return h;
}

}  // namespace

CanonicalForm canonical_form(const GammaSemiring& s, bool permute_gamma) {
  check_shape(s);
  if (s.m > 8)
    throw CapacityError("canonical forms are limited to carriers of size 8");
  if (permute_gamma && s.r > 6)
    throw CapacityError("the gamma permutation scan is limited to alphabets of size 6");

  CanonicalForm best;
  std::vector<Element> best_key;
  bool have = false;
  for (const auto& p : element_perms(s.m)) {
    GammaSemiring relabeled = relabel(s, p);
    for (const auto& q : gamma_perms(s.r, permute_gamma)) {
      GammaSemiring cand = permute_gamma ? gamma_relabel(relabeled, q) : relabeled;
      std::vector<Element> key = table_key(cand);
      if (!have || key < best_key) {
        have = true;
        best_key = std::move(key);
        best.structure = std::move(cand);
        best.relabeling = p;
        best.gamma_perm = q;
      }
    }
  }
  best.gamma_permuted = permute_gamma;
  best.digest = sha256_hex(serialize_structure(best.structure));
  return best;
}

std::string digest(const GammaSemiring& s, bool permute_gamma) {
  return canonical_form(s, permute_gamma).digest;
}

IsoResult are_isomorphic(const GammaSemiring& a, const GammaSemiring& b,
                         bool permute_gamma) {
  IsoResult res;
  if (!same_shape(a, b)) {
    res.note = shape_note(a, b);
    return res;
  }
  CanonicalForm ca = canonical_form(a, permute_gamma);
  CanonicalForm cb = canonical_form(b, permute_gamma);
  if (!(ca.structure == cb.structure)) return res;

  // f = cb.relabeling^-1 after ca.relabeling, likewise for the gamma perms.
  std::vector<int> inv_p(b.m), inv_q(b.r);
  for (int i = 0; i < b.m; ++i) inv_p[cb.relabeling[i]] = i;
  for (int i = 0; i < b.r; ++i) inv_q[cb.gamma_perm[i]] = i;
  std::vector<int> f(a.m), q(a.r);
  for (int i = 0; i < a.m; ++i) f[i] = inv_p[ca.relabeling[i]];
  for (int i = 0; i < a.r; ++i) q[i] = inv_q[ca.gamma_perm[i]];

  if (witness_matches(a, b, f, q)) {
    res.isomorphic = true;
    res.witness = make_witness(a, b, f);
    res.gamma_perm = q;
    return res;
  }

  auto found = exhaustive_iso(a, b, permute_gamma);
  if (found) {
    res.isomorphic = true;
    res.witness = make_witness(a, b, found->first);
    res.gamma_perm = found->second;
    res.note = "canonical witness failed verification; recovered by exhaustive search";
    return res;
  }
  res.note = "digest collision: canonical forms agree but no bijection exists";
  return res;
}

std::vector<IsoClass> partition(const std::vector<GammaSemiring>& batch,
                                bool permute_gamma) {
  std::map<std::string, std::vector<std::size_t>> by_digest;
  std::vector<std::string> digests(batch.size());
  for (std::size_t i = 0; i < batch.size(); ++i) {
    digests[i] = digest(batch[i], permute_gamma);
    by_digest[digests[i]].push_back(i);
  }

  std::vector<IsoClass> out;
  for (const auto& [dg, members] : by_digest) {
    bool collision = false;
    for (std::size_t k = 1; k < members.size() && !collision; ++k) {
      IsoResult r =
          are_isomorphic(batch[members[0]], batch[members[k]], permute_gamma);
      if (!r.isomorphic) collision = true;
    }
    if (!collision) {
      IsoClass cls;
      cls.digest = dg;
      cls.members = members;
      out.push_back(std::move(cls));
      continue;
    }
    // Hash collision inside one bucket: split by exhaustive pairwise search
    // and flag every resulting class.
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t idx : members) {
      bool placed = false;
      for (auto& grp : groups) {
        if (exhaustive_iso(batch[grp[0]], batch[idx], permute_gamma)) {
          grp.push_back(idx);
          placed = true;
          break;
        }
      }
      if (!placed) groups.push_back({idx});
    }
    for (auto& grp : groups) {
      IsoClass cls;
      cls.digest = dg;
      cls.members = std::move(grp);
      cls.collision_flagged = true;
      cls.note = "digest collision split by exhaustive isomorphism search";
      out.push_back(std::move(cls));
    }
  }
  return out;
}

}  // namespace gsr
