#include "bisetcalc/biset.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bisetcalc {

namespace {

// smallest preimage per quotient element
std::vector<int> quotient_preimages(const GroupPtr& Q, const GroupHom& proj) {
  std::vector<int> pre(Q->order(), -1);
  for (int x = 0; x < proj.source->order(); ++x) {
    int q = proj.apply(x);
    if (pre[q] < 0) pre[q] = x;
  }
  return pre;
}

}  // namespace

BisetX build_X(const GroupPtr& K, const GroupPtr& R) {
  BisetX X;
  X.K = K;
  X.R = R;
  X.outK = out_group_cached(K);
  X.outR = out_group_cached(R);
  X.kernels = quotients_iso_to(R, K);

  const auto k_gens = minimal_generating_sequence(*K);
  const auto r_gens = minimal_generating_sequence(*R);

  // orbit map: (kernel, iso image) -> point index
  std::map<std::pair<int, std::vector<int>>, int> point_of;

  for (int ni = 0; ni < static_cast<int>(X.kernels.size()); ++ni) {
    auto [Q, proj] = quotient(R, X.kernels[ni]);
    X.quotients.emplace_back(Q, proj);
    auto pre = quotient_preimages(Q, proj);

    // generators of the double-coset relation on Iso(Q, K):
    // post-compose with inner automorphisms of K,
    // pre-compose with the conjugation automorphisms of Q induced from R.
    std::vector<std::vector<int>> left_maps;   // K element tables
    for (int kg : k_gens) {
      std::vector<int> c(K->order());
      for (int x = 0; x < K->order(); ++x) c[x] = K->conj(kg, x);
      left_maps.push_back(std::move(c));
    }
    std::vector<std::vector<int>> right_maps;  // Q element tables
    for (int rg : r_gens) {
      std::vector<int> c(Q->order());
      for (int q = 0; q < Q->order(); ++q) c[q] = proj.apply(R->conj(rg, pre[q]));
      right_maps.push_back(std::move(c));
    }

    auto isos = isomorphisms(Q, K);
    std::map<std::vector<int>, int> visited;  // iso image -> orbit id
    std::vector<std::vector<std::vector<int>>> orbits;
    for (const auto& phi : isos) {
      if (visited.count(phi.image)) continue;
      int orbit_id = static_cast<int>(orbits.size());
      std::vector<std::vector<int>> orbit{phi.image};
      visited.emplace(phi.image, orbit_id);
      for (size_t head = 0; head < orbit.size(); ++head) {
        const std::vector<int> cur = orbit[head];
        auto push = [&](std::vector<int> img) {
          if (visited.emplace(img, orbit_id).second) orbit.push_back(std::move(img));
        };
        for (const auto& c : left_maps) {
          std::vector<int> img(cur.size());
          for (size_t q = 0; q < cur.size(); ++q) img[q] = c[cur[q]];
          push(std::move(img));
        }
        for (const auto& c : right_maps) {
          std::vector<int> img(cur.size());
          for (size_t q = 0; q < cur.size(); ++q) img[q] = cur[c[q]];
          push(std::move(img));
        }
      }
      orbits.push_back(std::move(orbit));
    }
    // one point per orbit, ordered by the lex-minimal representative
    std::vector<std::vector<int>> reps;
    reps.reserve(orbits.size());
    for (const auto& orbit : orbits)
      reps.push_back(*std::min_element(orbit.begin(), orbit.end()));
    std::vector<int> order(orbits.size());
    for (size_t o = 0; o < orbits.size(); ++o) order[o] = static_cast<int>(o);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return reps[a] < reps[b]; });
    std::vector<int> point_index(orbits.size());
    for (int o : order) {
      point_index[o] = static_cast<int>(X.points.size());
      X.points.push_back(BisetPoint{ni, reps[o]});
    }
    for (const auto& [img, orbit_id] : visited)
      point_of.emplace(std::make_pair(ni, img), point_index[orbit_id]);
  }

  // kernel lookup by element set
  std::map<std::vector<int>, int> kernel_of;
  for (int ni = 0; ni < static_cast<int>(X.kernels.size()); ++ni)
    kernel_of.emplace(X.kernels[ni].elements, ni);

  const int nK = X.outK->out->order();
  const int nR = X.outR->out->order();
  const int sz = X.size();
  X.left_action.assign(nK, std::vector<int>(sz, -1));
  X.right_action.assign(sz, std::vector<int>(nR, -1));

  for (int u = 0; u < nK; ++u) {
    const auto& alpha = X.outK->section_map(u).image;
    for (int ptv = 0; ptv < sz; ++ptv) {
      const auto& pt = X.points[ptv];
      std::vector<int> img(pt.iso_image.size());
      for (size_t q = 0; q < img.size(); ++q) img[q] = alpha[pt.iso_image[q]];
      auto it = point_of.find(std::make_pair(pt.kernel, img));
      if (it == point_of.end())
        throw std::logic_error("left action left the biset");
      X.left_action[u][ptv] = it->second;
    }
  }

  for (int w = 0; w < nR; ++w) {
    const auto& beta = X.outR->section_map(w).image;
    std::vector<int> beta_inv(R->order());
    for (int x = 0; x < R->order(); ++x) beta_inv[beta[x]] = x;
    for (int ptv = 0; ptv < sz; ++ptv) {
      const auto& pt = X.points[ptv];
      // new kernel N' = beta^{-1}(N)
      std::vector<int> nprime;
      nprime.reserve(X.kernels[pt.kernel].elements.size());
      for (int x : X.kernels[pt.kernel].elements) nprime.push_back(beta_inv[x]);
      std::sort(nprime.begin(), nprime.end());
      auto kit = kernel_of.find(nprime);
      if (kit == kernel_of.end())
        throw std::logic_error("right action left the kernel family");
      const int ni2 = kit->second;
      const auto& [Q2, proj2] = X.quotients[ni2];
      auto pre2 = quotient_preimages(Q2, proj2);
      const auto& [Q1, proj1] = X.quotients[pt.kernel];
      // induced map beta-bar: R/N' -> R/N, then compose with the iso
      std::vector<int> img(Q2->order());
      for (int q = 0; q < Q2->order(); ++q)
        img[q] = pt.iso_image[proj1.apply(beta[pre2[q]])];
      auto it = point_of.find(std::make_pair(ni2, img));
      if (it == point_of.end())
        throw std::logic_error("right action left the biset");
      X.right_action[ptv][w] = it->second;
    }
  }
  return X;
}

Character tensor_character(const BisetX& X, const Character& V) {
  const GroupPtr& outK = X.outK->out;
  const GroupPtr& outR = X.outR->out;
  if (V.group->table_hash() != outR->table_hash())
    throw std::invalid_argument("module lives on the wrong outer group");

  Character result;
  result.group = outK;
  result.classes = conjugacy_classes(outK);
  result.values.reserve(result.classes->num_classes());
  const int nR = outR->order();
  for (int c = 0; c < result.classes->num_classes(); ++c) {
    int u = result.classes->rep[c];
    Cyclotomic acc;
    for (int w = 0; w < nR; ++w) {
      long fixed = 0;
      for (int x = 0; x < X.size(); ++x)
        if (X.left_action[u][x] == X.right_action[x][w]) ++fixed;
      if (fixed != 0)
        acc += V.values[V.classes->class_of[w]].scaled(Rational(fixed));
    }
    result.values.push_back(acc.scaled(Rational(1, nR)));
  }
  return result;
}

Character transport_out_character(const Character& V, const GroupHom& iso,
                                  const OutGroup& outR, const OutGroup& outH) {
  GroupHom inv = iso.inverted();
  Character result;
  result.group = outR.out;
  result.classes = conjugacy_classes(outR.out);
  result.values.reserve(result.classes->num_classes());
  const int n = iso.source->order();
  for (int c = 0; c < result.classes->num_classes(); ++c) {
    const auto& f = outR.section_map(result.classes->rep[c]).image;
    // conjugate the automorphism through the isomorphism
    std::vector<int> g(n);
    for (int x = 0; x < n; ++x) g[iso.apply(x)] = iso.apply(f[x]);
    int aut_idx = outH.aut_index(g);
    if (aut_idx < 0)
      throw std::logic_error("transported automorphism missing from Aut");
    int out_elt = outH.proj.apply(aut_idx);
    result.values.push_back(V.values[V.classes->class_of[out_elt]]);
  }
  return result;
}

namespace {

Character ind_rho_nabla_impl(const PairIndex& index, const AtomicModule& atom,
                             int class_K, const std::vector<GroupHom>* transport) {
  if (class_K < 0 || class_K >= index.classes.num_classes())
    throw std::invalid_argument("K is not a subquotient class of G");
  const GroupPtr& Krep = index.classes.reps[class_K];
  const auto& outH = *index.outs[atom.class_index];

  Character total;
  bool first = true;
  for (size_t i = 0; i < index.classes.sqs.size(); ++i) {
    if (index.classes.class_of[i] != atom.class_index) continue;
    const GroupPtr& Rgrp = index.classes.sqs[i].group;
    BisetX X = build_X(Krep, Rgrp);
    const GroupHom& iso =
        transport ? (*transport)[i] : index.classes.chosen_iso[i];
    Character VR = transport_out_character(atom.V, iso, *X.outR, outH);
    Character term = tensor_character(X, VR);
    if (first) {
      total = std::move(term);
      first = false;
    } else {
      for (size_t c = 0; c < total.values.size(); ++c)
        total.values[c] += term.values[c];
    }
  }
  if (first) {
    // no subquotient in the class: zero character of Out(K)
    auto outK = out_group_cached(Krep);
    total.group = outK->out;
    total.classes = conjugacy_classes(outK->out);
    total.values.assign(total.classes->num_classes(), Cyclotomic());
  }
  return total;
}

}  // namespace

Character ind_rho_nabla(const PairIndex& index, const AtomicModule& atom,
                        int class_K) {
  return ind_rho_nabla_impl(index, atom, class_K, nullptr);
}

Character ind_rho_nabla_with_transport(const PairIndex& index,
                                       const AtomicModule& atom, int class_K,
                                       const std::vector<GroupHom>& transport) {
  return ind_rho_nabla_impl(index, atom, class_K, &transport);
}

}  // namespace bisetcalc
