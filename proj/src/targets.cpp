#include <algorithm>

#include "idyn/falsify.hpp"

namespace idyn {
namespace {

using Witness = std::optional<std::string>;

std::string fmt(const InstanceFacts& f, Subset s) { return f.ground().format(s); }

/// The basic pair test behind every transitivity formulation: each ordered
/// pair of nonempty members (U, V) has some n in 1..h with ok(n, U, V).
template <class Ok>
std::optional<std::pair<Subset, Subset>> failing_pair(const SetFamily& family, unsigned h, Ok ok) {
  for (auto u : family) {
    if (u.empty()) continue;
    for (auto v : family) {
      if (v.empty()) continue;
      bool found = false;
      for (unsigned n = 1; n <= h && !found; ++n) found = ok(n, u, v);
      if (!found) return std::pair{u, v};
    }
  }
  return std::nullopt;
}

/// Points x all of whose nonempty members M ∋ x of `family` have some
/// n in 1..h with ok(n, M).
template <class Ok>
Subset returning_points(const InstanceFacts& f, const SetFamily& family, unsigned h, Ok ok) {
  Subset out = f.full();
  for (auto m : family) {
    if (m.empty()) continue;
    bool found = false;
    for (unsigned n = 1; n <= h && !found; ++n) found = ok(n, m);
    if (!found) out -= m;
  }
  return out;
}

bool i_transitive(InstanceFacts& f) { return f.transitive(OpenKind::open, true); }

Witness verdict_mismatch(const std::string& what, bool expected, bool got) {
  if (expected == got) return std::nullopt;
  return what + " gives " + (got ? "true" : "false") + " against " + (expected ? "true" : "false");
}

/// First nonempty open U failing `ok`, rendered as `U={...}`.
template <class Ok>
Witness first_bad_open(InstanceFacts& f, Ok ok) {
  for (auto u : f.top().topology().opens()) {
    if (!u.empty() && !ok(u)) return "U=" + fmt(f, u);
  }
  return std::nullopt;
}

template <class Ok>
Witness first_bad_subset(InstanceFacts& f, Ok ok) {
  const auto count = Subset::Bits{1} << f.ground().size();
  for (Subset::Bits a = 0; a < count; ++a) {
    if (!ok(Subset(a))) return "A=" + fmt(f, Subset(a));
  }
  return std::nullopt;
}

Witness dense_both(InstanceFacts& f, Subset s, const std::string& label) {
  if (!f.i_dense(s)) return label + " is not I-dense";
  if (!f.star_dense(s)) return label + " is not *-dense";
  return std::nullopt;
}

Subset union_of_iterates(const SelfMap& map, Subset u, Direction direction) {
  Subset out = u;
  for (unsigned n = 1; n <= map.horizon(); ++n) {
    out |= direction == Direction::forward ? map.iterate_image(n, u) : map.iterate_preimage(n, u);
  }
  return out;
}

bool all_unions_i_dense(InstanceFacts& f, Direction direction) {
  for (auto u : f.top().topology().opens()) {
    if (!u.empty() && !f.i_dense(union_of_iterates(f.map(), u, direction))) return false;
  }
  return true;
}

/// Opens U with f(U) = U.
std::vector<Subset> fixed_opens(InstanceFacts& f) {
  std::vector<Subset> out;
  for (auto u : f.top().topology().opens()) {
    if (f.map().image(u) == u) out.push_back(u);
  }
  return out;
}

bool nowhere_dense(const InstanceFacts& f, Subset a) { return f.top().interior(f.top().closure(a)).empty(); }

std::vector<TheoremTarget> build_registry() {
  std::vector<TheoremTarget> r;
  auto add = [&r](std::string id, std::string statement, TargetStatus status, TargetScope scope,
                  std::function<bool(InstanceFacts&)> hyp,
                  std::function<Witness(InstanceFacts&)> concl) {
    r.push_back({std::move(id), std::move(statement), status, scope, std::move(hyp), std::move(concl)});
  };
  const auto sound = TargetStatus::sound;
  const auto suspect = TargetStatus::suspect;
  const auto always = [](InstanceFacts&) { return true; };

  add("T4_1", "an open transitive map is I-transitive for a codense ideal", sound, TargetScope::model,
      [](InstanceFacts& f) { return f.open_map() && f.transitive(OpenKind::open, false) && f.codense(); },
      [](InstanceFacts& f) -> Witness {
        if (i_transitive(f)) return std::nullopt;
        const auto& w = f.transitive({OpenKind::open, true}).witness;
        return "not I-transitive at U=" + fmt(f, w->u) + " V=" + fmt(f, *w->v);
      });

  add("T4_7", "I-transitivity forces a codense ideal", sound, TargetScope::model, i_transitive,
      [](InstanceFacts& f) -> Witness {
        if (f.codense()) return std::nullopt;
        for (auto o : f.top().topology().opens()) {
          if (!o.empty() && f.ideal().contains(o)) return "open " + fmt(f, o) + " lies in I";
        }
        return "not codense";
      });

  add("L3_1", "transitivity by pairs, by closures of images, and by basic pairs agree for every basis",
      sound, TargetScope::map, always, [](InstanceFacts& f) -> Witness {
        const auto& t = f.top();
        const auto& map = f.map();
        const unsigned h = map.horizon();
        const bool plain = f.transitive(OpenKind::open, false);
        const bool by_closure = !failing_pair(t.topology().opens(), h, [&](unsigned n, Subset u, Subset v) {
          return t.closure(map.iterate_image(n, u)).meets(v);
        });
        if (auto w = verdict_mismatch("closure form", plain, by_closure)) return w;
        for (const auto& basis : t.bases()) {
          const bool by_basis = !failing_pair(basis, h, [&](unsigned n, Subset u, Subset v) {
            return map.iterate_image(n, u).meets(v);
          });
          if (auto w = verdict_mismatch("basis " + format_family(f.ground(), basis), plain, by_basis)) return w;
        }
        return std::nullopt;
      });

  add("L3_2", "K-transitivity equals the K-closure form of the pair test, every kind", sound, TargetScope::map,
      always, [](InstanceFacts& f) -> Witness {
        const auto& t = f.top();
        const auto& map = f.map();
        for (auto kind : kAllOpenKinds) {
          const bool plain = f.transitive(kind, false);
          const bool by_kcl = !failing_pair(t.kopen(kind), map.horizon(), [&](unsigned n, Subset u, Subset v) {
            return t.kclosure(kind, map.iterate_image(n, u)).meets(v);
          });
          if (auto w = verdict_mismatch(std::string(to_string(kind)) + "-closure form", plain, by_kcl)) return w;
        }
        return std::nullopt;
      });

  add("L3_3", "non-wandering points by neighbourhoods, by closures of images, and by basic sets agree",
      sound, TargetScope::map, always, [](InstanceFacts& f) -> Witness {
        const auto& t = f.top();
        const auto& map = f.map();
        const Subset omega = f.nonwandering({OpenKind::open, false});
        auto closure_form = [&](unsigned n, Subset m) { return t.closure(map.iterate_image(n, m)).meets(m); };
        const Subset by_closure = returning_points(f, t.topology().opens(), map.horizon(), closure_form);
        if (by_closure != omega) return "closure form gives " + fmt(f, by_closure) + " against " + fmt(f, omega);
        for (const auto& basis : t.bases()) {
          const Subset by_basis = returning_points(f, basis, map.horizon(), closure_form);
          if (by_basis != omega) {
            return "basis " + format_family(f.ground(), basis) + " gives " + fmt(f, by_basis) + " against " +
                   fmt(f, omega);
          }
        }
        return std::nullopt;
      });

  add("L3_4", "K-non-wandering points equal the K-closure form, every kind", sound, TargetScope::map, always,
      [](InstanceFacts& f) -> Witness {
        const auto& t = f.top();
        const auto& map = f.map();
        for (auto kind : kAllOpenKinds) {
          const Subset omega = f.nonwandering({kind, false});
          const Subset by_kcl = returning_points(f, t.kopen(kind), map.horizon(), [&](unsigned n, Subset m) {
            return t.kclosure(kind, map.iterate_image(n, m)).meets(m);
          });
          if (by_kcl != omega) {
            return std::string(to_string(kind)) + " gives " + fmt(f, by_kcl) + " against " + fmt(f, omega);
          }
        }
        return std::nullopt;
      });

  add("T4_2", "I-transitive: the forward union of iterates of a nonempty open set is I-dense and *-dense",
      sound, TargetScope::model, i_transitive, [](InstanceFacts& f) -> Witness {
        for (auto u : f.top().topology().opens()) {
          if (u.empty()) continue;
          if (auto w = dense_both(f, union_of_iterates(f.map(), u, Direction::forward),
                                  "forward union of " + fmt(f, u))) {
            return w;
          }
        }
        return std::nullopt;
      });

  add("T4_4", "continuous and I-transitive: the backward union of a nonempty open set is I-dense and *-dense",
      sound, TargetScope::model, [](InstanceFacts& f) { return f.continuous() && i_transitive(f); },
      [](InstanceFacts& f) -> Witness {
        for (auto u : f.top().topology().opens()) {
          if (u.empty()) continue;
          if (auto w = dense_both(f, union_of_iterates(f.map(), u, Direction::backward),
                                  "backward union of " + fmt(f, u))) {
            return w;
          }
        }
        return std::nullopt;
      });

  add("T4_5C", "I-transitive: a closed A with invariant complement is X or has ψ(A*) empty", sound,
      TargetScope::model, i_transitive, [](InstanceFacts& f) -> Witness {
        for (auto u : f.top().topology().opens()) {
          const Subset a = f.ground().complement(u);
          if (!f.map().image(u).subset_of(u) || a == f.full()) continue;
          if (!f.psi(f.local(a)).empty()) return "A=" + fmt(f, a);
        }
        return std::nullopt;
      });

  add("T4_6_1TO23", "I-transitive: a nonempty open U with f(U)=U is I-dense and *-dense", sound,
      TargetScope::model, i_transitive, [](InstanceFacts& f) -> Witness {
        for (auto u : fixed_opens(f)) {
          if (u.empty()) continue;
          if (auto w = dense_both(f, u, "U=" + fmt(f, u))) return w;
        }
        return std::nullopt;
      });

  add("C4_INV", "I-transitive: a nonempty invariant open set is I-dense and *-dense", sound, TargetScope::model,
      i_transitive, [](InstanceFacts& f) -> Witness {
        for (auto u : f.top().topology().opens()) {
          if (u.empty() || !is_invariant(f.map(), u)) continue;
          if (auto w = dense_both(f, u, "U=" + fmt(f, u))) return w;
        }
        return std::nullopt;
      });

  add("CODENSE_EQ", "codense ⇔ ψ(∅)=∅ ⇔ X*=X ⇔ every open A ⊆ A* ⇔ ψ vanishes on I", sound, TargetScope::ideal,
      always, [](InstanceFacts& f) -> Witness {
        const bool c1 = f.codense();
        const bool c2 = f.psi(Subset{}).empty();
        const bool c3 = f.local(f.full()) == f.full();
        bool c4 = true;
        for (auto o : f.top().topology().opens()) c4 = c4 && o.subset_of(f.local(o));
        bool c5 = true;
        for (auto m : f.ideal().members()) c5 = c5 && f.psi(m).empty();
        if (c1 == c2 && c1 == c3 && c1 == c4 && c1 == c5) return std::nullopt;
        return std::string("forms disagree: ") + (c1 ? "1" : "0") + (c2 ? "1" : "0") + (c3 ? "1" : "0") +
               (c4 ? "1" : "0") + (c5 ? "1" : "0");
      });

  add("COMPAT_EQ", "compatibility ⇔ A∖A* ∈ I for all A; compatible ideals have ψψ=ψ and ψ(A)∖A ∈ I", sound,
      TargetScope::ideal, always, [](InstanceFacts& f) -> Witness {
        const bool compatible = f.compatible();
        bool residue = true;
        const auto count = Subset::Bits{1} << f.ground().size();
        for (Subset::Bits a = 0; a < count && residue; ++a) residue = f.ideal().contains(Subset(a) - f.local(Subset(a)));
        if (compatible != residue) return "A∖A* form disagrees with compatibility";
        if (!compatible) return std::nullopt;
        return first_bad_subset(f, [&](Subset a) {
          return f.psi(f.psi(a)) == f.psi(a) && f.ideal().contains(f.psi(a) - a);
        });
      });

  add("T4_8", "compatible and I-transitive: X∖(A∖A*) is I-dense and *-dense", sound, TargetScope::model,
      [](InstanceFacts& f) { return f.compatible() && i_transitive(f); },
      [](InstanceFacts& f) -> Witness {
        return first_bad_subset(f, [&](Subset a) {
          const Subset s = f.ground().complement(a - f.local(a));
          return f.i_dense(s) && f.star_dense(s);
        });
      });

  add("T4_8_PSI", "compatible and I-transitive: X∖(ψ(A)∖A) is I-dense and *-dense", sound, TargetScope::model,
      [](InstanceFacts& f) { return f.compatible() && i_transitive(f); },
      [](InstanceFacts& f) -> Witness {
        return first_bad_subset(f, [&](Subset a) {
          const Subset s = f.ground().complement(f.psi(a) - a);
          return f.i_dense(s) && f.star_dense(s);
        });
      });

  add("T4_8_2", "I-transitive: X∖A* ⊆ (X∖A)*", sound, TargetScope::model, i_transitive,
      [](InstanceFacts& f) -> Witness {
        return first_bad_subset(f, [&](Subset a) {
          return f.ground().complement(f.local(a)).subset_of(f.local(f.ground().complement(a)));
        });
      });

  add("T_IO", "I-transitive: every open set is I-open", sound, TargetScope::model, i_transitive,
      [](InstanceFacts& f) -> Witness {
        return first_bad_open(f, [&](Subset u) { return u.subset_of(f.top().interior(f.local(u))); });
      });

  add("T5_OPEN_NW", "open map with codense ideal: Ω ⊆ Ω_I", sound, TargetScope::model,
      [](InstanceFacts& f) { return f.open_map() && f.codense(); },
      [](InstanceFacts& f) -> Witness {
        const Subset gap = f.nonwandering({OpenKind::open, false}) - f.nonwandering({OpenKind::open, true});
        if (gap.empty()) return std::nullopt;
        return "points " + fmt(f, gap) + " are non-wandering only";
      });

  add("NW_INCL", "Ω_I ⊆ Ω for every kind, and no open set around a point of Ω_I lies in I", sound,
      TargetScope::model, always, [](InstanceFacts& f) -> Witness {
        for (auto kind : kAllOpenKinds) {
          const Subset gap = f.nonwandering({kind, true}) - f.nonwandering({kind, false});
          if (!gap.empty()) return std::string(to_string(kind)) + ": " + fmt(f, gap) + " only I-non-wandering";
        }
        const Subset omega_i = f.nonwandering({OpenKind::open, true});
        for (auto o : f.top().topology().opens()) {
          if (o.meets(omega_i) && f.ideal().contains(o)) return "open " + fmt(f, o) + " in I";
        }
        return std::nullopt;
      });

  add("DENSE_EQ_CC", "completely codense ⇔ every dense set is I-dense ⇔ every member of I is nowhere dense",
      sound, TargetScope::ideal, always, [](InstanceFacts& f) -> Witness {
        const bool cc = f.completely_codense();
        bool dense_i = true;
        const auto count = Subset::Bits{1} << f.ground().size();
        for (Subset::Bits a = 0; a < count && dense_i; ++a) {
          if (f.dense(Subset(a))) dense_i = f.i_dense(Subset(a));
        }
        bool members_nd = true;
        for (auto m : f.ideal().members()) members_nd = members_nd && nowhere_dense(f, m);
        if (cc == dense_i && cc == members_nd) return std::nullopt;
        return std::string("completely codense=") + (cc ? "1" : "0") + " dense⇒I-dense=" + (dense_i ? "1" : "0") +
               " members nowhere dense=" + (members_nd ? "1" : "0");
      });

  add("DENSITY_CHAIN", "I-dense ⇒ *-dense ⇒ dense", sound, TargetScope::ideal, always,
      [](InstanceFacts& f) -> Witness {
        return first_bad_subset(f, [&](Subset a) {
          return (!f.i_dense(a) || f.star_dense(a)) && (!f.star_dense(a) || f.dense(a));
        });
      });

  add("KI_CHAIN", "β-I ⇒ b-I ⇒ semi-I ⇒ I ⇒ transitive and b-I ⇒ pre-I ⇒ I", sound, TargetScope::model, always,
      [](InstanceFacts& f) -> Witness {
        auto ki = [&](OpenKind k) { return f.transitive(k, true); };
        const std::pair<const char*, bool> links[] = {
            {"β-I ⇒ b-I", !ki(OpenKind::beta) || ki(OpenKind::b)},
            {"b-I ⇒ semi-I", !ki(OpenKind::b) || ki(OpenKind::semi)},
            {"semi-I ⇒ I", !ki(OpenKind::semi) || ki(OpenKind::open)},
            {"I ⇒ transitive", !ki(OpenKind::open) || f.transitive(OpenKind::open, false)},
            {"b-I ⇒ pre-I", !ki(OpenKind::b) || ki(OpenKind::pre)},
            {"pre-I ⇒ I", !ki(OpenKind::pre) || ki(OpenKind::open)},
        };
        for (const auto& [name, ok] : links) {
          if (!ok) return std::string(name) + " fails";
        }
        return std::nullopt;
      });

  add("I0_DEGENERATE", "with I={∅} every ideal-graded verdict and Ω_I equal the plain ones", sound,
      TargetScope::model, [](InstanceFacts& f) { return f.ideal().trivial(); },
      [](InstanceFacts& f) -> Witness {
        for (auto kind : kAllOpenKinds) {
          const Verdict& plain = f.transitive({kind, false});
          const Verdict& graded = f.transitive({kind, true});
          const bool same_witness = plain.witness.has_value() == graded.witness.has_value() &&
                                    (!plain.witness || (plain.witness->u == graded.witness->u &&
                                                        plain.witness->v == graded.witness->v &&
                                                        plain.witness->n == graded.witness->n &&
                                                        plain.witness->n_range == graded.witness->n_range));
          if (plain.holds != graded.holds || !same_witness) return std::string(to_string(kind)) + " verdicts differ";
          if (f.nonwandering({kind, false}) != f.nonwandering({kind, true})) {
            return std::string(to_string(kind)) + " non-wandering sets differ";
          }
        }
        return first_bad_subset(f, [&](Subset a) { return f.local(a) == f.top().closure(a); });
      });

  // Compact Hausdorff second-countable collapses to discrete at finite size.
  add("P5_02", "discrete, completely codense, continuous, I-transitive: some orbit is I-dense", sound,
      TargetScope::model,
      [](InstanceFacts& f) {
        return f.top().hausdorff() && f.completely_codense() && f.continuous() && i_transitive(f);
      },
      [](InstanceFacts& f) -> Witness {
        if (f.has_orbit(DensityGrade::i_dense)) return std::nullopt;
        return "no I-dense orbit";
      });

  add("P5_03", "discrete, I the nowhere dense sets, continuous, I-transitive: some orbit is I-dense", sound,
      TargetScope::model,
      [](InstanceFacts& f) {
        if (!f.top().hausdorff() || !f.continuous()) return false;
        Subset nd;
        const auto count = Subset::Bits{1} << f.ground().size();
        for (Subset::Bits a = 0; a < count; ++a) {
          if (nowhere_dense(f, Subset(a))) nd |= Subset(a);
        }
        return f.ideal().support() == nd && i_transitive(f);
      },
      [](InstanceFacts& f) -> Witness {
        if (f.has_orbit(DensityGrade::i_dense)) return std::nullopt;
        return "no I-dense orbit";
      });

  add("P5_04", "discrete, completely codense, continuous open map: I-transitive ⇔ Ω_I=X with an I-dense (*-dense) orbit",
      sound, TargetScope::model,
      [](InstanceFacts& f) {
        return f.top().hausdorff() && f.completely_codense() && f.continuous() && f.open_map();
      },
      [](InstanceFacts& f) -> Witness {
        const bool it = i_transitive(f);
        const bool full = f.nonwandering({OpenKind::open, true}) == f.full();
        if (it != (full && f.has_orbit(DensityGrade::i_dense))) return "I-dense orbit form disagrees";
        if (it != (full && f.has_orbit(DensityGrade::star_dense))) return "*-dense orbit form disagrees";
        return std::nullopt;
      });

  add("T4_3_CONV", "proper I: I-transitive when every forward union of a nonempty open set is I-dense", suspect,
      TargetScope::model,
      [](InstanceFacts& f) { return f.ideal().proper() && all_unions_i_dense(f, Direction::forward); },
      [](InstanceFacts& f) -> Witness {
        if (i_transitive(f)) return std::nullopt;
        const auto& w = f.transitive({OpenKind::open, true}).witness;
        return "not I-transitive at U=" + fmt(f, w->u) + " V=" + fmt(f, *w->v);
      });

  add("T4_5_FK", "f^k(I)-transitive for some k when every backward union of a nonempty open set is I-dense",
      suspect, TargetScope::model, [](InstanceFacts& f) { return all_unions_i_dense(f, Direction::backward); },
      [](InstanceFacts& f) -> Witness {
        const unsigned h = f.map().horizon();
        for (unsigned k = 1; k <= h; ++k) {
          if (transitive_over(f.top().topology().opens(), f.map(), f.pushed(k).support()).holds) return std::nullopt;
        }
        return "no k in 1.." + std::to_string(h) + " works";
      });

  add("T4_6_2TO1", "proper I: I-transitive when every nonempty open U with f(U)=U is I-dense", suspect, TargetScope::model,
      [](InstanceFacts& f) {
        if (!f.ideal().proper()) return false;
        for (auto u : fixed_opens(f)) {
          if (!u.empty() && !f.i_dense(u)) return false;
        }
        return true;
      },
      [](InstanceFacts& f) -> Witness {
        if (i_transitive(f)) return std::nullopt;
        const auto& w = f.transitive({OpenKind::open, true}).witness;
        return "not I-transitive at U=" + fmt(f, w->u) + " V=" + fmt(f, *w->v);
      });

  add("T4_6_3TO1", "proper I: I-transitive when every nonempty open U with f(U)=U is *-dense", suspect, TargetScope::model,
      [](InstanceFacts& f) {
        if (!f.ideal().proper()) return false;
        for (auto u : fixed_opens(f)) {
          if (!u.empty() && !f.star_dense(u)) return false;
        }
        return true;
      },
      [](InstanceFacts& f) -> Witness {
        if (i_transitive(f)) return std::nullopt;
        const auto& w = f.transitive({OpenKind::open, true}).witness;
        return "not I-transitive at U=" + fmt(f, w->u) + " V=" + fmt(f, *w->v);
      });

  return r;
}

}  // namespace

std::string_view to_string(TargetStatus status) { return status == TargetStatus::sound ? "sound" : "suspect"; }

const std::vector<TheoremTarget>& theorem_registry() {
  static const std::vector<TheoremTarget> registry = build_registry();
  return registry;
}

std::vector<TheoremTarget> select_targets(bool include_sound, bool include_suspect) {
  std::vector<TheoremTarget> out;
  for (const auto& t : theorem_registry()) {
    if ((t.status == TargetStatus::sound && include_sound) || (t.status == TargetStatus::suspect && include_suspect)) {
      out.push_back(t);
    }
  }
  return out;
}

const TheoremTarget* find_target(std::string_view id) {
  for (const auto& t : theorem_registry()) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

}  // namespace idyn
