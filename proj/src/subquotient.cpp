#include "bisetcalc/subquotient.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bisetcalc {

GroupFingerprint fingerprint(const FiniteGroup& g) {
  GroupFingerprint f;
  f.order = g.order();
  f.abelian = g.is_abelian();
  std::map<int, int> orders;
  for (int x = 0; x < g.order(); ++x) ++orders[g.element_order(x)];
  f.order_profile.assign(orders.begin(), orders.end());
  // conjugacy class sizes via orbits of conjugation
  std::vector<char> seen(g.order(), 0);
  std::map<int, int> sizes;
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    int size = 0;
    for (int h = 0; h < g.order(); ++h) {
      int y = g.conj(h, x);
      if (!seen[y]) { seen[y] = 1; ++size; }
    }
    ++sizes[size];
  }
  f.class_sizes.assign(sizes.begin(), sizes.end());
  return f;
}

std::vector<Subquotient> subquotients(const GroupPtr& G) {
  std::vector<Subquotient> result;
  auto subs = subgroups_cached(G);
  for (const auto& H : subs) {
    RealizedSubgroup rh = realize_subgroup(H);
    for (const auto& N : subs) {
      if (N.order() > H.order()) break;  // subs sorted by order
      if (!std::includes(H.elements.begin(), H.elements.end(),
                         N.elements.begin(), N.elements.end()))
        continue;
      if (!is_subgroup_normal(N, H)) continue;
      // N re-indexed inside the realized H
      std::vector<int> local;
      local.reserve(N.elements.size());
      for (int x : N.elements) local.push_back(rh.index_in[x]);
      std::sort(local.begin(), local.end());
      auto [q, proj] = quotient(rh.group, Subgroup{rh.group, std::move(local)});
      Subquotient sq;
      sq.parent = G;
      sq.sub = H;
      sq.ker = N;
      sq.sub_group = rh.group;
      sq.embed = rh.embed;
      sq.group = q;
      sq.proj = std::move(proj);
      result.push_back(std::move(sq));
    }
  }
  std::sort(result.begin(), result.end(),
            [](const Subquotient& a, const Subquotient& b) {
              if (a.sub.order() != b.sub.order())
                return a.sub.order() < b.sub.order();
              if (a.sub.elements != b.sub.elements)
                return a.sub.elements < b.sub.elements;
              return a.ker.elements < b.ker.elements;
            });
  return result;
}

std::vector<int> IsoClassIndex::class_members(int cls) const {
  std::vector<int> m;
  for (size_t i = 0; i < class_of.size(); ++i)
    if (class_of[i] == cls) m.push_back(static_cast<int>(i));
  return m;
}

IsoClassIndex iso_class_index(const GroupPtr& G) {
  IsoClassIndex idx;
  idx.parent = G;
  idx.sqs = subquotients(G);
  const int n = static_cast<int>(idx.sqs.size());

  std::vector<GroupFingerprint> fps(n);
  for (int i = 0; i < n; ++i) fps[i] = fingerprint(*idx.sqs[i].group);

  // classes keyed by (fingerprint, first occurrence); isomorphism tests only
  // inside a fingerprint bucket
  struct ClassInfo {
    GroupFingerprint fp;
    int first_sq;
    std::vector<int> members;
  };
  std::vector<ClassInfo> classes;
  std::vector<int> class_of(n, -1);
  std::vector<GroupHom> iso_to_rep(n);

  for (int i = 0; i < n; ++i) {
    bool placed = false;
    for (auto& c : classes) {
      if (c.fp != fps[i]) continue;
      auto isos = isomorphisms(idx.sqs[i].group, idx.sqs[c.first_sq].group);
      if (isos.empty()) continue;
      class_of[i] = static_cast<int>(&c - classes.data());
      iso_to_rep[i] = std::move(isos.front());
      c.members.push_back(i);
      placed = true;
      break;
    }
    if (!placed) {
      ClassInfo c;
      c.fp = fps[i];
      c.first_sq = i;
      c.members = {i};
      classes.push_back(std::move(c));
      class_of[i] = static_cast<int>(classes.size()) - 1;
      GroupHom ident;
      ident.source = idx.sqs[i].group;
      ident.target = idx.sqs[i].group;
      ident.image.resize(idx.sqs[i].group->order());
      for (int x = 0; x < idx.sqs[i].group->order(); ++x) ident.image[x] = x;
      iso_to_rep[i] = std::move(ident);
    }
  }

  // size order, ties by fingerprint then first occurrence
  std::vector<int> perm(classes.size());
  for (size_t i = 0; i < classes.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (classes[a].fp.order != classes[b].fp.order)
      return classes[a].fp.order < classes[b].fp.order;
    if (classes[a].fp != classes[b].fp) return classes[a].fp < classes[b].fp;
    return classes[a].first_sq < classes[b].first_sq;
  });
  std::vector<int> rank(classes.size());
  for (size_t i = 0; i < classes.size(); ++i) rank[perm[i]] = static_cast<int>(i);

  idx.reps.resize(classes.size());
  for (size_t i = 0; i < classes.size(); ++i)
    idx.reps[rank[i]] = idx.sqs[classes[i].first_sq].group;
  idx.class_of.resize(n);
  for (int i = 0; i < n; ++i) idx.class_of[i] = rank[class_of[i]];
  idx.chosen_iso = std::move(iso_to_rep);
  return idx;
}

std::vector<Subgroup> quotients_iso_to(const GroupPtr& R, const GroupPtr& K) {
  std::vector<Subgroup> result;
  if (R->order() % K->order() != 0) return result;
  const int target = R->order() / K->order();
  for (const auto& N : subgroups_cached(R)) {
    if (N.order() != target) continue;
    if (!is_normal_in_group(R, N)) continue;
    auto [q, proj] = quotient(R, N);
    if (!isomorphisms(q, K).empty()) result.push_back(N);
  }
  return result;
}

}  // namespace bisetcalc
