#include "afp/skewfield.hpp"

#include <algorithm>
#include <set>

namespace afp {

namespace {

nlohmann::json elems(std::initializer_list<std::size_t> ids) { return {{"elements", std::vector<std::size_t>(ids)}}; }

bool is_one(const TrEndo& a) {
  for (std::size_t i = 0; i < a.group_order(); ++i) {
    if (a.images()[i] != i) return false;
  }
  return true;
}

// Subgroup generated by `gens`, as a membership mask.
std::vector<bool> span_of(const TranslationGroup& group, const std::vector<TIndex>& gens) {
  std::vector<bool> in(group.order(), false);
  std::vector<TIndex> queue{TIndex(0)};
  in[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto g : gens) {
      const auto next = group.compose(g, queue[head]);
      if (!in[next.value]) {
        in[next.value] = true;
        queue.push_back(next);
      }
    }
  }
  return in;
}

}  // namespace

std::optional<std::size_t> TPEndoSet::index_of(const TrEndo& alpha) const {
  auto it = std::find(elements.begin(), elements.end(), alpha);
  if (it == elements.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

void sort_canonical(std::vector<TrEndo>& endos) {
  const auto rank = [](const TrEndo& a) { return a.is_zero() ? 0 : is_one(a) ? 1 : 2; };
  std::sort(endos.begin(), endos.end(), [&](const TrEndo& a, const TrEndo& b) {
    const auto ra = rank(a), rb = rank(b);
    if (ra != rb) return ra < rb;
    return a < b;
  });
}

TPEndoSet generate_tp_endos(const AffinePlane& plane, const TranslationGroup& group, PointId base) {
  if (!group.is_transitive()) throw InvalidInput("generating trace-preserving endomorphisms needs a transitive group");
  std::vector<std::pair<TrEndo, std::optional<Dilation>>> found;
  found.emplace_back(endo_zero(group), std::nullopt);
  for (auto& delta : enumerate_dilations_fixing(plane, base)) {
    auto alpha = endo_alpha_delta(group, delta);
    const bool dup = std::any_of(found.begin(), found.end(), [&](const auto& f) { return f.first == alpha; });
    if (!dup) found.emplace_back(std::move(alpha), std::move(delta));
  }

  std::vector<TrEndo> order;
  for (const auto& f : found) order.push_back(f.first);
  sort_canonical(order);

  TPEndoSet set{base, {}, {}, {}, {}, {}};
  for (auto& alpha : order) {
    auto it = std::find_if(found.begin(), found.end(), [&](const auto& f) { return f.first == alpha; });
    set.elements.push_back(alpha);
    set.source.push_back(it->second);
  }
  if (set.size() < 2 || !is_one(set.elements[1])) throw VerificationError("generated set does not contain one");

  const auto n = set.size();
  const auto lookup = [&](const TrEndo& a, const char* what, std::size_t i, std::size_t j) {
    auto idx = set.index_of(a);
    if (!idx) {
      throw VerificationError(std::string("generated set not closed under ") + what + " at elements " +
                              std::to_string(i) + ", " + std::to_string(j));
    }
    return static_cast<std::uint32_t>(*idx);
  };
  set.add_table.resize(n * n);
  set.mul_table.resize(n * n);
  set.negation.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    set.negation[i] = lookup(endo_negate(group, set.elements[i]), "negation", i, i);
    for (std::size_t j = 0; j < n; ++j) {
      set.add_table[i * n + j] = lookup(endo_add(group, set.elements[i], set.elements[j]), "addition", i, j);
      set.mul_table[i * n + j] = lookup(endo_compose(group, set.elements[i], set.elements[j]), "composition", i, j);
    }
  }
  return set;
}

std::vector<TIndex> greedy_generating_set(const TranslationGroup& group) {
  std::vector<TIndex> gens;
  auto in = span_of(group, gens);
  for (std::uint32_t i = 1; i < group.order(); ++i) {
    if (in[i]) continue;
    gens.emplace_back(i);
    in = span_of(group, gens);
  }
  return gens;
}

std::vector<TrEndo> brute_force_tp_endos(const TranslationGroup& group, std::size_t max_candidates) {
  const auto gens = greedy_generating_set(group);
  const auto n = group.order();
  std::size_t candidates = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    candidates *= n;
    if (candidates > max_candidates) {
      throw InvalidInput("brute force would need more than " + std::to_string(max_candidates) + " candidates");
    }
  }

  std::vector<TrEndo> out;
  std::vector<std::uint32_t> assignment(gens.size(), 0);
  constexpr std::uint32_t kUnset = UINT32_MAX;
  std::vector<std::uint32_t> image(n);
  std::vector<TIndex> queue;
  for (std::size_t c = 0; c < candidates; ++c) {
    // Extend the generator images along the Cayley graph: image(g s) = image(g) image(s).
    std::fill(image.begin(), image.end(), kUnset);
    image[0] = 0;
    queue.assign(1, TIndex(0));
    bool consistent = true;
    for (std::size_t head = 0; head < queue.size() && consistent; ++head) {
      const auto s = queue[head];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const auto next = group.compose(gens[k], s);
        const auto value = group.compose(TIndex(assignment[k]), TIndex(image[s.value])).value;
        if (image[next.value] == kUnset) {
          image[next.value] = value;
          queue.push_back(next);
        } else if (image[next.value] != value) {
          consistent = false;
          break;
        }
      }
    }
    if (consistent) {
      auto alpha = TrEndo::from_images(image);
      if (is_group_endomorphism(group, alpha) && is_trace_preserving(group, alpha)) out.push_back(std::move(alpha));
    }
    // Next assignment (odometer).
    for (std::size_t k = 0; k < assignment.size(); ++k) {
      if (++assignment[k] < n) break;
      assignment[k] = 0;
    }
  }
  sort_canonical(out);
  return out;
}

Dilation recover_dilation(const AffinePlane& plane, const TranslationGroup& group, const TrEndo& alpha, PointId p) {
  if (alpha.group_order() != group.order()) throw InvalidInput("endomorphism belongs to a different group");
  if (p.value >= plane.num_points()) throw InvalidInput("base point out of range");
  if (alpha.is_zero()) throw InvalidInput("the zero endomorphism has no associated dilation");
  if (!group.is_transitive()) throw InvalidInput("dilation recovery needs a transitive translation group");

  const auto n = plane.num_points();
  const auto moved = [&](PointId from, PointId to, PointId at) {
    return group.element(alpha(*group.taking(from, to)))(at);
  };
  std::vector<std::uint32_t> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = moved(p, PointId(i), p).value;

  const auto fail = [](const std::string& what) { throw VerificationError("recovered map " + what); };
  if (image[p.value] != p.value) fail("does not fix the base point");

  std::vector<bool> hit(n, false);
  for (auto v : image) {
    if (hit[v]) fail("is not a bijection");
    hit[v] = true;
  }

  // alpha(s_QR) carries delta(Q) to delta(R), so delta(R) lies on the line
  // through delta(Q) parallel to QR.
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t r = 0; r < n; ++r) {
      const PointId Q(q), R(r);
      if (moved(Q, R, PointId(image[q])).value != image[r]) fail("does not intertwine the translations");
      if (q == r) continue;
      const auto aux = plane.parallel_line_through(plane.line_through(Q, R), PointId(image[q]));
      if (!plane.contains(aux, PointId(image[r]))) fail("sends a line to a non-parallel line");
    }
  }

  auto f = PointBijection::from_images(std::move(image));
  auto delta = classify_dilation(plane, f);
  if (!delta) fail("is not a dilation");
  const auto f_inv = inverse(f);
  for (std::uint32_t i = 0; i < group.order(); ++i) {
    const auto conj = compose(f, compose(group.element(TIndex(i)).map(), f_inv));
    if (conj != group.element(alpha(TIndex(i))).map()) fail("does not conjugate every translation onto its image");
  }
  return *delta;
}

TrEndo invert(const AffinePlane& plane, const TranslationGroup& group, const TrEndo& alpha, PointId base) {
  if (alpha.is_zero()) throw InvalidInput("zero has no multiplicative inverse");
  const auto delta = recover_dilation(plane, group, alpha, base);
  auto beta = endo_alpha_delta(group, delta);
  const auto one = endo_one(group);
  if (endo_compose(group, alpha, beta) != one || endo_compose(group, beta, alpha) != one) {
    throw VerificationError("constructed inverse is not two-sided");
  }
  return beta;
}

VerificationReport verify_skew_field(const AffinePlane& plane, const TranslationGroup& group, const TPEndoSet& set) {
  VerificationReport report;
  const auto n = set.size();
  const auto& S = set.elements;

  const auto run = [&](const std::string& name, auto&& body, std::string detail = {}) {
    std::optional<nlohmann::json> w;
    std::string why;
    body(w, why);
    if (w) {
      report.fail(name, why, *w);
    } else {
      report.pass(name, detail);
    }
  };

  run("elements_are_trace_preserving_endomorphisms", [&](auto& w, auto& why) {
    for (std::size_t i = 0; i < n && !w; ++i) {
      if (auto v = find_homomorphism_violation(group, S[i])) {
        why = "element is not a group endomorphism";
        w = nlohmann::json{{"element", i}, {"pair", {v->first.value, v->second.value}}};
      } else if (auto s = find_trace_violation(group, S[i])) {
        why = "element is not trace-preserving";
        w = nlohmann::json{{"element", i}, {"translation", s->value}};
      }
    }
  }, std::to_string(n) + " elements");

  run("one_ne_zero", [&](auto& w, auto& why) {
    if (n < 2 || !S[0].is_zero() || !is_one(S[1]) || S[0] == S[1]) {
      why = "zero and one are missing or coincide";
      w = nlohmann::json{{"size", n}};
    }
  });

  run("additive_closure", [&](auto& w, auto& why) {
    for (std::size_t i = 0; i < n && !w; ++i)
      for (std::size_t j = 0; j < n && !w; ++j)
        if (endo_add(group, S[i], S[j]) != S[set.add(i, j)]) {
          why = "sum is not the tabulated element";
          w = elems({i, j});
        }
  });
  run("additive_associative", [&](auto& w, auto& why) {
    for (std::size_t a = 0; a < n && !w; ++a)
      for (std::size_t b = 0; b < n && !w; ++b)
        for (std::size_t c = 0; c < n && !w; ++c)
          if (set.add(set.add(a, b), c) != set.add(a, set.add(b, c))) {
            why = "addition is not associative";
            w = elems({a, b, c});
          }
  });
  run("additive_commutative", [&](auto& w, auto& why) {
    for (std::size_t a = 0; a < n && !w; ++a)
      for (std::size_t b = 0; b < n && !w; ++b)
        if (set.add(a, b) != set.add(b, a)) {
          why = "addition does not commute";
          w = elems({a, b});
        }
  });
  run("additive_identity", [&](auto& w, auto& why) {
    for (std::size_t a = 0; a < n && !w; ++a)
      if (set.add(a, 0) != a || set.add(0, a) != a) {
        why = "zero is not neutral";
        w = elems({a});
      }
  });
  run("additive_inverses", [&](auto& w, auto& why) {
    for (std::size_t a = 0; a < n && !w; ++a) {
      const auto neg = set.negation[a];
      if (set.add(a, neg) != 0 || set.add(neg, a) != 0) {
        why = "negation is not an additive inverse";
        w = elems({a, neg});
      }
    }
  });

  run("multiplicative_closure", [&](auto& w, auto& why) {
    for (std::size_t i = 0; i < n && !w; ++i)
      for (std::size_t j = 0; j < n && !w; ++j)
        if (endo_compose(group, S[i], S[j]) != S[set.mul(i, j)]) {
          why = "composite is not the tabulated element";
          w = elems({i, j});
        }
  });
  run("multiplicative_associative", [&](auto& w, auto& why) {
    for (std::size_t a = 0; a < n && !w; ++a)
      for (std::size_t b = 0; b < n && !w; ++b)
        for (std::size_t c = 0; c < n && !w; ++c)
          if (set.mul(set.mul(a, b), c) != set.mul(a, set.mul(b, c))) {
            why = "composition is not associative";
            w = elems({a, b, c});
          }
  });
  run("multiplicative_identity", [&](auto& w, auto& why) {
    for (std::size_t a = 0; a < n && !w; ++a)
      if (set.mul(a, 1) != a || set.mul(1, a) != a) {
        why = "one is not neutral";
        w = elems({a});
      }
  });
  run("left_distributive", [&](auto& w, auto& why) {
    for (std::size_t a = 0; a < n && !w; ++a)
      for (std::size_t b = 0; b < n && !w; ++b)
        for (std::size_t c = 0; c < n && !w; ++c)
          if (set.mul(a, set.add(b, c)) != set.add(set.mul(a, b), set.mul(a, c))) {
            why = "a(b + c) != ab + ac";
            w = elems({a, b, c});
          }
  });
  run("right_distributive", [&](auto& w, auto& why) {
    for (std::size_t a = 0; a < n && !w; ++a)
      for (std::size_t b = 0; b < n && !w; ++b)
        for (std::size_t c = 0; c < n && !w; ++c)
          if (set.mul(set.add(a, b), c) != set.add(set.mul(a, c), set.mul(b, c))) {
            why = "(a + b)c != ac + bc";
            w = elems({a, b, c});
          }
  });

  run("no_zero_divisors", [&](auto& w, auto& why) {
    for (std::size_t a = 1; a < n && !w; ++a)
      for (std::size_t b = 1; b < n && !w; ++b)
        if (set.mul(a, b) == 0) {
          why = "two nonzero elements compose to zero";
          w = elems({a, b});
        }
  });

  std::vector<std::optional<PointBijection>> recovered(n);
  run("dilation_recovery", [&](auto& w, auto& why) {
    std::set<PointBijection> distinct;
    for (std::size_t a = 1; a < n && !w; ++a) {
      try {
        const auto delta = recover_dilation(plane, group, S[a], set.base);
        recovered[a] = delta.map();
        if (delta(set.base) != set.base) {
          why = "recovered dilation moves the base point";
          w = elems({a});
        } else if (set.source[a] && delta.map() != inverse(set.source[a]->map())) {
          // The element was generated as s -> d^-1 s d, so the recovered
          // dilation must be d^-1.
          why = "recovered dilation disagrees with the generating dilation";
          w = elems({a});
        } else if (!distinct.insert(delta.map()).second) {
          why = "two elements recover the same dilation";
          w = elems({a});
        }
      } catch (const Error& e) {
        why = e.what();
        w = elems({a});
      }
    }
  }, "every nonzero element");

  run("multiplicative_inverses", [&](auto& w, auto& why) {
    for (std::size_t a = 1; a < n && !w; ++a) {
      try {
        const auto beta = invert(plane, group, S[a], set.base);
        const auto b = set.index_of(beta);
        if (!b) {
          why = "inverse lies outside the set";
          w = elems({a});
        } else if (set.mul(a, *b) != 1 || set.mul(*b, a) != 1) {
          why = "inverse is not two-sided";
          w = elems({a, *b});
        }
      } catch (const Error& e) {
        why = e.what();
        w = elems({a});
      }
    }
  });

  run("nonzero_multiplicative_group", [&](auto& w, auto& why) {
    for (std::size_t a = 1; a < n && !w; ++a) {
      bool has_inverse = false;
      for (std::size_t b = 1; b < n; ++b) {
        if (set.mul(a, b) == 0) {
          why = "nonzero elements are not closed under composition";
          w = elems({a, b});
          break;
        }
        has_inverse = has_inverse || (set.mul(a, b) == 1 && set.mul(b, a) == 1);
      }
      if (!w && !has_inverse) {
        why = "nonzero element without inverse";
        w = elems({a});
      }
    }
  });

  return report;
}

CommutativityResult check_multiplicative_commutativity(const TPEndoSet& set) {
  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      if (set.mul(a, b) != set.mul(b, a)) return {false, std::pair{a, b}};
    }
  }
  return {};
}

VerificationReport verify_oracle_equivalence(const TranslationGroup& group, const TPEndoSet& set) {
  VerificationReport report;
  const auto oracle = brute_force_tp_endos(group);
  const std::set<TrEndo> lhs(set.elements.begin(), set.elements.end());
  const std::set<TrEndo> rhs(oracle.begin(), oracle.end());
  const auto detail = "generated " + std::to_string(lhs.size()) + ", oracle " + std::to_string(rhs.size());
  if (lhs == rhs) {
    report.pass("oracle_equivalence", detail, nlohmann::json{{"generated", lhs.size()}, {"oracle", rhs.size()}});
    return report;
  }
  nlohmann::json w{{"generated", lhs.size()}, {"oracle", rhs.size()}};
  for (const auto& a : rhs) {
    if (!lhs.contains(a)) {
      w["missing_from_generated"] = endo_to_json(a);
      break;
    }
  }
  for (const auto& a : lhs) {
    if (!rhs.contains(a)) {
      w["missing_from_oracle"] = endo_to_json(a);
      break;
    }
  }
  report.fail("oracle_equivalence", detail, w);
  return report;
}

}  // namespace afp
