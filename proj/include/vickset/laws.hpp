// Copyright 2026 The vickset Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vickset/combinatorial.hpp"
#include "vickset/enumeration.hpp"
#include "vickset/error.hpp"
#include "vickset/oracles.hpp"
#include "vickset/quotient.hpp"
#include "vickset/relation.hpp"
#include "vickset/single_good.hpp"
#include "vickset/text.hpp"
#include "vickset/universe.hpp"
#include "vickset/value.hpp"

// Executable laws over generated finite universes.
//
// A law pairs a case generator with a predicate over a case. Universal laws
// pass when the predicate holds on every generated case; existential laws
// pass when some case falsifies it (the case is then the reported witness).
// Either way the first falsifying case in generation order is reported, and
// it can be replayed through the predicate on its own.

namespace vickset::laws {

enum class Profile { Quick, Full };
enum class LawKind { Universal, Existential };

inline Profile parse_profile(const std::string& s) {
    if (s == "quick") {
        return Profile::Quick;
    }
    if (s == "full") {
        return Profile::Full;
    }
    throw ValidationError("unknown profile '" + s + "' (expected quick or full)");
}

inline const char* profile_name(Profile p) {
    return p == Profile::Quick ? "quick" : "full";
}

struct LawConfig {
    Profile profile = Profile::Quick;
    std::uint64_t seed = 1;
};

/// Named Values making up one generated instance.
struct Case {
    std::vector<std::pair<std::string, Value>> fields;

    [[nodiscard]] const Value& operator[](std::size_t k) const {
        return fields.at(k).second;
    }
};

inline std::string case_text(const Case& c) {
    std::string out = "{";
    for (std::size_t k = 0; k < c.fields.size(); ++k) {
        if (k > 0) {
            out += "; ";
        }
        out += c.fields[k].first + "=" + to_text(c.fields[k].second);
    }
    return out + "}";
}

namespace detail {
struct StopGeneration {};
}  // namespace detail

/// Receives generated cases. Stops generation (by unwinding) once the runner
/// has seen a falsifying case.
class CaseSink {
  public:
    explicit CaseSink(std::function<bool(const Case&)> on_case)
        : on_case_(std::move(on_case)) {}

    void phase(std::string name) { phases_.emplace_back(std::move(name), 0); }

    void operator()(Case c) {
        if (phases_.empty()) {
            phase("cases");
        }
        ++phases_.back().second;
        if (!on_case_(c)) {
            throw detail::StopGeneration{};
        }
    }

    [[nodiscard]] const std::vector<std::pair<std::string, std::uint64_t>>&
    phases() const {
        return phases_;
    }

  private:
    std::function<bool(const Case&)> on_case_;
    std::vector<std::pair<std::string, std::uint64_t>> phases_;
};

struct Law {
    std::string id;
    std::string statement;
    LawKind kind;
    std::function<void(const LawConfig&, CaseSink&)> generate;
    std::function<bool(const Case&)> check;
};

struct LawReport {
    std::string id;
    std::string statement;
    LawKind kind = LawKind::Universal;
    LawConfig config;
    bool passed = false;
    std::uint64_t cases = 0;
    std::vector<std::pair<std::string, std::uint64_t>> phases;
    std::optional<Case> counterexample;
    double elapsed_ms = 0;
};

namespace detail {

inline Relation rel(const Value& v) { return Relation::unchecked(v); }

inline std::vector<Value> subsets_of(const Value& x) {
    std::vector<Value> out;
    for_each_subset(x, [&](const Value& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

/// Arrangements without repetition of up to `max_len` elements of `x`.
inline std::vector<std::vector<Value>> distinct_lists(const Value& x,
                                                      std::size_t max_len) {
    std::vector<std::vector<Value>> out;
    std::vector<Value> current;
    std::function<void()> extend = [&]() {
        out.push_back(current);
        if (current.size() == max_len) {
            return;
        }
        for (const auto& e : x.elements()) {
            if (std::find(current.begin(), current.end(), e) == current.end()) {
                current.push_back(e);
                extend();
                current.pop_back();
            }
        }
    };
    extend();
    return out;
}

inline Value list_value(const std::vector<Value>& xs) {
    // Lists travel inside cases as ((0, x0), (1, x1), ...).
    std::vector<Value> out;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        out.push_back(Value::pair(Value::integer(static_cast<std::int64_t>(k)), xs[k]));
    }
    return Value::set(std::move(out));
}

inline std::vector<Value> value_list(const Value& v) {
    std::vector<Value> out;
    for (const auto& p : v.elements()) {
        out.push_back(p.second());
    }
    return out;
}

inline std::uint64_t falling_factorial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    std::uint64_t r = 1;
    for (std::uint64_t j = 0; j < k; ++j) {
        r *= n - j;
    }
    return r;
}

/// Single-good families: bidder sets of size 2 and 3, every nonempty grid
/// drawn from the base values (size <= 4 on quick), every bidder of interest.
inline void single_good_cases(const LawConfig& cfg, CaseSink& sink) {
    Value base = cfg.profile == Profile::Quick
                     ? Value::set({Value::integer(0), Value::integer(1),
                                   Value::integer(2), Value::integer(3)})
                     : Value::set({Value::integer(0), Value::rational(1, 2),
                                   Value::integer(1), Value::integer(2),
                                   Value::integer(3)});
    sink.phase(cfg.profile == Profile::Quick ? "grids-from-0..3" : "grids-from-0,1/2,1,2,3");
    for (std::size_t n : {2U, 3U}) {
        Value bidders = universe::atoms(n);
        for (const auto& grid : subsets_of(base)) {
            if (grid.empty()) {
                continue;
            }
            for (const auto& i : bidders.elements()) {
                sink(Case{{{"bidders", bidders}, {"grid", grid}, {"i", i}}});
            }
        }
    }
}

inline void vcg_cases(const LawConfig& cfg, CaseSink& sink,
                      std::string_view stream) {
    universe::Rng rng(cfg.seed, stream);
    std::size_t count = cfg.profile == Profile::Quick ? 200 : 1000;
    sink.phase("random-instances-G<=4-N<=3");
    for (std::size_t k = 0; k < count; ++k) {
        std::size_t goods = 1 + rng.below(4);
        std::size_t bidders = 1 + rng.below(3);
        auto inst = oracle::random_monotone_instance(rng, goods, bidders, 5);
        sink(Case{{{"instance", instance_to_value(inst)}}});
    }
}

inline bool l23_instance(const Relation& f, const Relation& p, const Relation& q) {
    bool hypotheses = runiq(f) && is_transitive(p) && is_symmetric(p) &&
                      is_equivalence(q, domain(q)) && compatible(f, p, q);
    return !hypotheses || runiq(quotient(f, p, q));
}

inline std::vector<Law> build_registry() {
    std::vector<Law> laws;

    laws.push_back(Law{
        "set_boolean_algebra",
        "union/intersection commute, associate, absorb and distribute; "
        "a - b = a & (U - b)",
        LawKind::Universal,
        [](const LawConfig&, CaseSink& sink) {
            auto subsets = subsets_of(universe::atoms(3));
            sink.phase("exhaustive-3-atoms");
            for (const auto& a : subsets) {
                for (const auto& b : subsets) {
                    for (const auto& c : subsets) {
                        sink(Case{{{"a", a}, {"b", b}, {"c", c}}});
                    }
                }
            }
        },
        [](const Case& c) {
            const Value& a = c[0];
            const Value& b = c[1];
            const Value& d = c[2];
            Value u = set_union(set_union(a, b), d);
            return set_union(a, b) == set_union(b, a) &&
                   set_intersection(a, b) == set_intersection(b, a) &&
                   set_union(set_union(a, b), d) == set_union(a, set_union(b, d)) &&
                   set_intersection(set_intersection(a, b), d) ==
                       set_intersection(a, set_intersection(b, d)) &&
                   set_union(a, set_intersection(a, b)) == a &&
                   set_intersection(a, set_union(a, b)) == a &&
                   set_intersection(a, set_union(b, d)) ==
                       set_union(set_intersection(a, b), set_intersection(a, d)) &&
                   set_union(a, set_intersection(b, d)) ==
                       set_intersection(set_union(a, b), set_union(a, d)) &&
                   set_difference(a, b) ==
                       set_intersection(a, set_difference(u, b));
        }});

    laws.push_back(Law{
        "value_order",
        "the Value order is total, antisymmetric and transitive; equality "
        "matches canonical text; parse(text(v)) = v",
        LawKind::Universal,
        [](const LawConfig& cfg, CaseSink& sink) {
            universe::Rng rng(cfg.seed, "value_order");
            std::size_t n = cfg.profile == Profile::Quick ? 2000 : 20000;
            sink.phase("random-triples-depth-3");
            for (std::size_t k = 0; k < n; ++k) {
                sink(Case{{{"u", universe::random_value(rng, 3)},
                           {"v", universe::random_value(rng, 3)},
                           {"w", universe::random_value(rng, 3)}}});
            }
        },
        [](const Case& c) {
            const Value& u = c[0];
            const Value& v = c[1];
            const Value& w = c[2];
            int outcomes = static_cast<int>(u < v) + static_cast<int>(u == v) +
                           static_cast<int>(v < u);
            bool total = outcomes == 1;
            bool antisymmetric = !(u <= v && v <= u) || u == v;
            bool transitive = !(u <= v && v <= w) || u <= w;
            bool text_equality = (u == v) == (to_text(u) == to_text(v));
            bool roundtrip = parse_value(to_text(u)) == u;
            return total && antisymmetric && transitive && text_equality &&
                   roundtrip;
        }});

    laws.push_back(Law{
        "lll53",
        "paste(paste(P, Q), R) = paste(P, paste(Q, R)) for all relations",
        LawKind::Universal,
        [](const LawConfig& cfg, CaseSink& sink) {
            auto rels = universe::all_relations(universe::atoms(2), universe::atoms(2));
            sink.phase("exhaustive-2x2");
            for (const auto& p : rels) {
                for (const auto& q : rels) {
                    for (const auto& r : rels) {
                        sink(Case{{{"P", p.value()}, {"Q", q.value()}, {"R", r.value()}}});
                    }
                }
            }
            universe::Rng rng(cfg.seed, "lll53");
            Value four = universe::atoms(4);
            std::size_t n = cfg.profile == Profile::Quick ? 10000 : 100000;
            sink.phase("random-4x4");
            for (std::size_t k = 0; k < n; ++k) {
                auto p = universe::random_relation(rng, four, four);
                auto q = universe::random_relation(rng, four, four);
                auto r = universe::random_relation(rng, four, four);
                sink(Case{{{"P", p.value()}, {"Q", q.value()}, {"R", r.value()}}});
            }
        },
        [](const Case& c) {
            Relation p = rel(c[0]);
            Relation q = rel(c[1]);
            Relation r = rel(c[2]);
            return paste(paste(p, q), r) == paste(p, paste(q, r));
        }});

    laws.push_back(Law{
        "paste_outside",
        "Domain(paste(P, Q)) = Domain P U Domain Q; paste(P, Q) restricted to "
        "Domain Q is Q; outside(R, X) = R - (X x Range R)",
        LawKind::Universal,
        [](const LawConfig& cfg, CaseSink& sink) {
            Value two = universe::atoms(2);
            auto rels = universe::all_relations(two, two);
            sink.phase("exhaustive-2x2");
            for (const auto& p : rels) {
                for (const auto& q : rels) {
                    sink(Case{{{"P", p.value()}, {"Q", q.value()}}});
                }
            }
            universe::Rng rng(cfg.seed, "paste_outside");
            Value three = universe::atoms(3);
            sink.phase("random-3x3");
            std::size_t n = cfg.profile == Profile::Quick ? 1000 : 10000;
            for (std::size_t k = 0; k < n; ++k) {
                sink(Case{{{"P", universe::random_relation(rng, three, three).value()},
                           {"Q", universe::random_relation(rng, three, three).value()}}});
            }
        },
        [](const Case& c) {
            Relation p = rel(c[0]);
            Relation q = rel(c[1]);
            Relation pasted = paste(p, q);
            Value dq = domain(q);
            Relation restricted = rel(set_difference(pasted.value(),
                                                     outside(pasted, dq).value()));
            // outside by direct filtering, independent of the product form
            std::vector<Value> kept;
            for (const auto& xy : p.pairs()) {
                if (!dq.contains(xy.first())) {
                    kept.push_back(xy);
                }
            }
            return domain(pasted) == set_union(domain(p), dq) && restricted == q &&
                   outside(p, dq).value() == Value::set(kept);
        }});

    laws.push_back(Law{
        "runiq_equivs",
        "all formulations of right-uniqueness agree: definition, alt, basic, "
        "wrt_eval_rel, wrt_eval_rel', wrt_ex1, wrt_THE, inj_on fst",
        LawKind::Universal,
        [](const LawConfig&, CaseSink& sink) {
            Value x = universe::atoms(3);
            sink.phase("exhaustive-3x2");
            for (const auto& r : universe::all_relations(x, universe::atoms(2))) {
                sink(Case{{{"R", r.value()}, {"universe", x}}});
            }
        },
        [](const Case& c) {
            Relation r = rel(c[0]);
            bool reference = runiq_forms::by_definition(r, c[1]);
            return runiq(r) == reference && runiq_forms::alt(r) == reference &&
                   runiq_forms::basic(r) == reference &&
                   runiq_forms::wrt_eval_rel(r) == reference &&
                   runiq_forms::wrt_eval_rel_prime(r) == reference &&
                   runiq_forms::wrt_ex1(r) == reference &&
                   runiq_forms::wrt_the(r) == reference &&
                   runiq_forms::inj_on_fst(r) == reference;
        }});

    laws.push_back(Law{
        "lll33",
        "runiq R = inj_on fst R",
        LawKind::Universal,
        [](const LawConfig&, CaseSink& sink) {
            sink.phase("exhaustive-3x2");
            for (const auto& r :
                 universe::all_relations(universe::atoms(3), universe::atoms(2))) {
                sink(Case{{{"R", r.value()}}});
            }
        },
        [](const Case& c) {
            Relation r = rel(c[0]);
            return runiq(r) == runiq_forms::inj_on_fst(r);
        }});

    laws.push_back(Law{
        "lll34",
        "runiq P implies |Domain P| = |P|",
        LawKind::Universal,
        [](const LawConfig&, CaseSink& sink) {
            sink.phase("exhaustive-3x2");
            for (const auto& r :
                 universe::all_relations(universe::atoms(3), universe::atoms(2))) {
                sink(Case{{{"P", r.value()}}});
            }
        },
        [](const Case& c) {
            Relation p = rel(c[0]);
            return !runiq(p) || domain(p).size() == p.size();
        }});

    laws.push_back(Law{
        "lll82",
        "runiq f and x in Domain f imply f,,x = f,,,x for set-valued f",
        LawKind::Universal,
        [](const LawConfig&, CaseSink& sink) {
            Value family = all_subsets(universe::atoms(2));
            sink.phase("exhaustive-3-atoms-to-subsets-of-2");
            for (const auto& f : universe::all_relations(universe::atoms(3), family)) {
                if (!runiq(f)) {
                    continue;
                }
                const Value dom = domain(f);
                for (const auto& x : dom.elements()) {
                    sink(Case{{{"f", f.value()}, {"x", x}}});
                }
            }
        },
        [](const Case& c) {
            Relation f = rel(c[0]);
            const Value& x = c[1];
            if (!runiq(f) || !domain(f).contains(x)) {
                return true;
            }
            return eval_rel(f, x) == eval_rel2(f, x);
        }});

    laws.push_back(Law{
        "graph_roundtrip",
        "eval_rel(graph(X, f), x) = f(x) for every finite table f on X and x in X",
        LawKind::Universal,
        [](const LawConfig&, CaseSink& sink) {
            Value three = universe::atoms(3);
            sink.phase("exhaustive-tables-3-atoms");
            for (const auto& table : universe::all_partial_functions(three, three)) {
                sink(Case{{{"X", domain(table)}, {"f", table.value()}}});
            }
        },
        [](const Case& c) {
            std::map<Value, Value> table;
            for (const auto& p : c[1].elements()) {
                table.emplace(p.first(), p.second());
            }
            Relation g = graph(c[0], table);
            auto fn = to_function(g);
            for (const auto& x : c[0].elements()) {
                if (!(eval_rel(g, x) == table.at(x)) || !(fn(x) == table.at(x))) {
                    return false;
                }
            }
            return runiq(g) && domain(g) == c[0];
        }});

    laws.push_back(Law{
        "argmax_equiv",
        "recursive arg_max over a candidate list = {x in A. f x = Max (f`A)}",
        LawKind::Universal,
        [](const LawConfig&, CaseSink& sink) {
            Value values = universe::atoms(3);
            for (std::size_t n = 1; n <= 5; ++n) {
                Value a = universe::atoms(n);
                sink.phase("exhaustive-|A|=" + std::to_string(n));
                for (const auto& f : universe::all_partial_functions(a, values)) {
                    if (domain(f) == a) {
                        sink(Case{{{"f", f.value()}, {"A", a}}});
                    }
                }
            }
        },
        [](const Case& c) {
            Relation f = rel(c[0]);
            const Value& a = c[1];
            std::vector<Value> forward(a.elements().begin(), a.elements().end());
            std::vector<Value> backward(forward.rbegin(), forward.rend());
            Value expected = arg_max_set(f, a);
            return arg_max_recursive(f, forward) == expected &&
                   arg_max_recursive(f, backward) == expected;
        }});

    laws.push_back(Law{
        "projector_classes",
        "projector E is right-unique with range {E``{x} | x in Domain E}; for "
        "an equivalence on its domain the classes partition that domain",
        LawKind::Universal,
        [](const LawConfig&, CaseSink& sink) {
            Value three = universe::atoms(3);
            sink.phase("exhaustive-3x3");
            for (const auto& e : universe::all_relations(three, three)) {
                sink(Case{{{"E", e.value()}}});
            }
        },
        [](const Case& c) {
            Relation e = rel(c[0]);
            Relation pr = projector(e);
            std::vector<Value> images;
            const Value dom = domain(e);
            for (const auto& x : dom.elements()) {
                images.push_back(image(e, Value::set({x})));
            }
            bool ok = runiq(pr) && range(pr) == Value::set(images) &&
                      domain(pr) == domain(e);
            if (is_equivalence(e, domain(e))) {
                ok = ok && is_partition_of(classes(e), domain(e));
            }
            return ok;
        }});

    laws.push_back(Law{
        "kernel_equivalence",
        "the kernel of a right-unique f is an equivalence on Domain f",
        LawKind::Universal,
        [](const LawConfig&, CaseSink& sink) {
            sink.phase("exhaustive-3x2");
            for (const auto& f : universe::all_partial_functions(universe::atoms(3),
                                                                 universe::atoms(2))) {
                sink(Case{{{"f", f.value()}}});
            }
        },
        [](const Case& c) {
            Relation f = rel(c[0]);
            Relation k = kernel(f);
            bool ok = is_equivalence(k, domain(f));
            const Value dom = domain(f);
            for (const auto& x : dom.elements()) {
                for (const auto& y : dom.elements()) {
                    ok = ok && (k.contains(x, y) == (eval_rel(f, x) == eval_rel(f, y)));
                }
            }
            return ok;
        }});

    laws.push_back(Law{
        "l23",
        "compatible f P Q, runiq f, trans P, sym P, equiv (Domain Q) Q imply "
        "runiq (quotient f P Q)",
        LawKind::Universal,
        [](const LawConfig&, CaseSink& sink) {
            Value x = universe::atoms(3);
            Value y = universe::atoms(2);
            auto fs = universe::all_partial_functions(x, y);
            auto q_on_y = universe::all_equivalences(y);
            sink.phase("P-equiv-on-Domain-f,Q-equiv-on-Y");
            for (const auto& f : fs) {
                for (const auto& p : universe::all_equivalences(domain(f))) {
                    for (const auto& q : q_on_y) {
                        sink(Case{{{"f", f.value()}, {"P", p.value()}, {"Q", q.value()}}});
                    }
                }
            }
            auto pers_x = universe::all_partial_equivalences(x);
            auto pers_y = universe::all_partial_equivalences(y);
            sink.phase("P-sym-trans-on-X,Q-equiv-on-its-domain");
            for (const auto& f : fs) {
                for (const auto& p : pers_x) {
                    for (const auto& q : pers_y) {
                        sink(Case{{{"f", f.value()}, {"P", p.value()}, {"Q", q.value()}}});
                    }
                }
            }
        },
        [](const Case& c) { return l23_instance(rel(c[0]), rel(c[1]), rel(c[2])); }});

    laws.push_back(Law{
        "l23_necessity",
        "witness: runiq f with equivalences P, Q where compatibility fails "
        "and quotient f P Q is not right-unique",
        LawKind::Existential,
        [](const LawConfig&, CaseSink& sink) {
            Value x = universe::atoms(3);
            Value y = universe::atoms(2);
            auto q_on_y = universe::all_equivalences(y);
            sink.phase("search-3x2");
            for (const auto& f : universe::all_partial_functions(x, y)) {
                for (const auto& p : universe::all_equivalences(domain(f))) {
                    for (const auto& q : q_on_y) {
                        if (!compatible(f, p, q)) {
                            sink(Case{{{"f", f.value()}, {"P", p.value()}, {"Q", q.value()}}});
                        }
                    }
                }
            }
        },
        [](const Case& c) {
            Relation f = rel(c[0]);
            Relation p = rel(c[1]);
            Relation q = rel(c[2]);
            bool setting = runiq(f) && is_equivalence(p, domain(p)) &&
                           is_equivalence(q, domain(q)) && !compatible(f, p, q);
            return !setting || runiq(quotient(f, p, q));
        }});

    laws.push_back(Law{
        "quotientFactors",
        "for equivalences p, q on their domains: quotient r p q = "
        "(projector p)^-1 O r O (projector q)",
        LawKind::Universal,
        [](const LawConfig& cfg, CaseSink& sink) {
            Value three = universe::atoms(3);
            auto eqs = cfg.profile == Profile::Quick
                           ? universe::all_equivalences(three)
                           : universe::all_partial_equivalences(three);
            sink.phase(cfg.profile == Profile::Quick
                           ? "exhaustive-3x3,equivalences-on-3-atoms"
                           : "exhaustive-3x3,equivalences-on-subsets-of-3-atoms");
            for (const auto& r : universe::all_relations(three, three)) {
                for (const auto& p : eqs) {
                    for (const auto& q : eqs) {
                        sink(Case{{{"r", r.value()}, {"p", p.value()}, {"q", q.value()}}});
                    }
                }
            }
        },
        [](const Case& c) {
            Relation r = rel(c[0]);
            Relation p = rel(c[1]);
            Relation q = rel(c[2]);
            if (!is_equivalence(p, domain(p)) || !is_equivalence(q, domain(q))) {
                return true;
            }
            return quotient(r, p, q) ==
                   compose(compose(converse(projector(p)), r), projector(q));
        }});

    laws.push_back(Law{
        "injections_equiv",
        "distinct xs and |Y| > 0 imply set(injections_alg xs Y) = "
        "injections (set xs) Y, with no repeated entries",
        LawKind::Universal,
        [](const LawConfig& cfg, CaseSink& sink) {
            std::size_t max_y = cfg.profile == Profile::Quick ? 4 : 5;
            auto lists = distinct_lists(universe::atoms(3), 3);
            sink.phase("xs<=3,1<=|Y|<=" + std::to_string(max_y));
            for (const auto& y : subsets_of(universe::atoms(max_y))) {
                if (y.empty() || y.size() > max_y) {
                    continue;
                }
                for (const auto& xs : lists) {
                    sink(Case{{{"xs", list_value(xs)}, {"Y", y}}});
                }
            }
        },
        [](const Case& c) {
            auto xs = value_list(c[0]);
            const Value& y = c[1];
            auto alg = injections_alg(xs, y);
            std::vector<Value> as_values;
            for (const auto& r : alg) {
                as_values.push_back(r.value());
            }
            Value as_set = Value::set(as_values);
            return as_set.size() == alg.size() &&
                   as_set == injections_oracle(Value::set(xs), y);
        }});

    laws.push_back(Law{
        "injections_count",
        "|injections X Y| = |Y|! / (|Y| - |X|)! when |X| <= |Y|, else 0",
        LawKind::Universal,
        [](const LawConfig&, CaseSink& sink) {
            sink.phase("|X|,|Y|<=4");
            for (std::size_t nx = 0; nx <= 4; ++nx) {
                for (std::size_t ny = 0; ny <= 4; ++ny) {
                    Value x = Value::set(std::vector<Value>());
                    std::vector<Value> xs;
                    for (std::size_t k = 0; k < nx; ++k) {
                        xs.push_back(Value::symbol(std::string(1, static_cast<char>('a' + k))));
                    }
                    sink(Case{{{"X", Value::set(xs)}, {"Y", universe::atoms(ny)}}});
                }
            }
        },
        [](const Case& c) {
            std::uint64_t expected = falling_factorial(c[1].size(), c[0].size());
            return injections_oracle(c[0], c[1]).size() == expected;
        }});

    laws.push_back(Law{
        "partitions_equiv",
        "distinct xs imply set(map set (all_partitions_list xs)) = "
        "all_partitions (set xs), with no repeated partitions",
        LawKind::Universal,
        [](const LawConfig& cfg, CaseSink& sink) {
            std::size_t max_n = cfg.profile == Profile::Quick ? 5 : 6;
            sink.phase("|xs|<=" + std::to_string(max_n));
            for (std::size_t n = 0; n <= max_n; ++n) {
                const Value atoms = universe::atoms(n);
                std::vector<Value> xs(atoms.elements().begin(), atoms.elements().end());
                sink(Case{{{"xs", list_value(xs)}}});
                std::reverse(xs.begin(), xs.end());
                if (n > 1) {
                    sink(Case{{{"xs", list_value(xs)}}});
                }
            }
        },
        [](const Case& c) {
            auto xs = value_list(c[0]);
            auto lists = all_partitions_list(xs);
            std::vector<Value> as_sets;
            for (const auto& p : lists) {
                as_sets.push_back(blocks_as_set(p));
            }
            Value family = Value::set(as_sets);
            return family.size() == lists.size() &&
                   family == all_partitions_oracle(Value::set(xs));
        }});

    laws.push_back(Law{
        "dom4_second_price",
        "truthful bidding is weakly dominant in the second-price auction",
        LawKind::Universal,
        single_good_cases,
        [](const Case& c) {
            auto m = second_price_single_good(c[0], c[1], c[2]);
            return dom4_check(m.bidder, m.allocation, m.price);
        }});

    laws.push_back(Law{
        "dom4_first_price_mutant",
        "witness: a first-price auction where misreporting beats truthful bidding",
        LawKind::Existential,
        [](const LawConfig& cfg, CaseSink& sink) {
            CaseSink* outer = &sink;
            sink.phase("bid-and-valuation-per-grid-instance");
            CaseSink instances([&](const Case& c) {
                auto m = first_price_single_good(c[0], c[1], c[2]);
                const Value bid_vectors_on_grid = domain(m.allocation);
                for (const auto& bv : bid_vectors_on_grid.elements()) {
                    for (const auto& v : c[1].elements()) {
                        Case full = c;
                        full.fields.emplace_back("b", bv);
                        full.fields.emplace_back("v", v);
                        (*outer)(std::move(full));
                    }
                }
                return true;
            });
            single_good_cases(cfg, instances);
        },
        [](const Case& c) {
            auto m = first_price_single_good(c[0], c[1], c[2]);
            Relation b = rel(c[3]);
            const Value& i = c[2];
            const Rational& v = c[4].as_number();
            Relation truthful = single_paste(b, i, c[4]);
            auto util = [&](const Relation& bid) {
                return v * eval_rel(m.allocation, bid.value()).as_number() -
                       eval_rel(m.price, bid.value()).as_number();
            };
            return util(b) <= util(truthful);
        }});

    laws.push_back(Law{
        "l24b_compatibility",
        "functional (Domain a), Domain a within Domain p, dom4 i a p, runiq p "
        "imply compatible p (Kernel (reducedbid i a)) Id; reducedprice is "
        "then right-unique",
        LawKind::Universal,
        single_good_cases,
        [](const Case& c) {
            auto m = second_price_single_good(c[0], c[1], c[2]);
            const Relation& a = m.allocation;
            const Relation& p = m.price;
            bool hypotheses = functional(domain(a)) &&
                              is_subset(domain(a), domain(p)) &&
                              dom4_check(m.bidder, a, p) && runiq(p);
            if (!hypotheses) {
                return false;  // the second-price instances must satisfy them
            }
            Relation rb = reducedbid(m.bidder, a);
            Relation id = identity(range(p));
            return compatible(p, kernel(rb), id) &&
                   runiq(quotient(p, kernel(rb), id)) &&
                   runiq(reducedprice(p, m.bidder, a));
        }});

    laws.push_back(Law{
        "genvick_from_reducedprice",
        "the fee t read off reducedprice, with w(b--i) = Max (Range (b--i)) and "
        "a1 = Min (Range a), satisfies p,,b = (a,,b - a1) * w(b--i) + t(b--i)",
        LawKind::Universal,
        single_good_cases,
        [](const Case& c) {
            auto m = second_price_single_good(c[0], c[1], c[2]);
            const Value& i = m.bidder;
            auto extraction = extract_fee(m.price, i, m.allocation);
            // A reduced bid is unresolved only when i wins at every own bid.
            for (const auto& x : extraction.unresolved.elements()) {
                const Value bid_vectors_on_grid = domain(m.allocation);
                for (const auto& bv : bid_vectors_on_grid.elements()) {
                    if (single_outside(Relation(bv), i).value() == x &&
                        eval_rel(m.allocation, bv) == Value::integer(0)) {
                        return false;
                    }
                }
            }
            // a1 is the allocation the fee lookup is keyed on; it is 0
            // unless i wins at every bid vector.
            Rational a1 = min_of(range(m.allocation)).as_number();
            Relation w = highest_competing_bid_table(i, m.allocation);
            Relation t = complete_fee(extraction, i, m.allocation, m.price, w, a1);
            return genvick_check(i, m.allocation, m.price, w, t, a1);
        }});

    laws.push_back(Law{
        "vcg_nonneg",
        "with monotone valuations every VCG payment is >= 0 and <= the "
        "payer's value for the bundle received",
        LawKind::Universal,
        [](const LawConfig& cfg, CaseSink& sink) { vcg_cases(cfg, sink, "vcg"); },
        [](const Case& c) {
            auto inst = instance_from_value(c[0]);
            auto outcome = clear_vickrey(inst);
            for (const auto& n : inst.bidders.elements()) {
                Rational pay = eval_rel(outcome.payments, n).as_number();
                Rational received = 0;
                for (const auto& p : outcome.allocation.pairs()) {
                    if (p.second() == n) {
                        received += inst.value(n, p.first());
                    }
                }
                if (pay < Rational(0) || pay > received) {
                    return false;
                }
            }
            return true;
        }});

    laws.push_back(Law{
        "vcg_oracle_match",
        "clear_vickrey agrees with the direct good-to-bidder assignment oracle "
        "on allocation, welfare and payments",
        LawKind::Universal,
        [](const LawConfig& cfg, CaseSink& sink) { vcg_cases(cfg, sink, "vcg"); },
        [](const Case& c) {
            auto inst = instance_from_value(c[0]);
            auto got = clear_vickrey(inst);
            auto want = oracle::vickrey(inst);
            return got.allocation == want.allocation && got.welfare == want.welfare &&
                   got.payments == want.payments;
        }});

    return laws;
}

}  // namespace detail

inline const std::vector<Law>& registry() {
    static const std::vector<Law> laws = detail::build_registry();
    return laws;
}

inline const Law& find_law(const std::string& id) {
    for (const auto& law : registry()) {
        if (law.id == id) {
            return law;
        }
    }
    throw ValidationError("unknown law '" + id + "'");
}

/// Runs one law. Deterministic in (law, profile, seed) except elapsed_ms.
inline LawReport run_law(const Law& law, const LawConfig& config) {
    LawReport report;
    report.id = law.id;
    report.statement = law.statement;
    report.kind = law.kind;
    report.config = config;
    std::optional<Case> falsified;
    CaseSink sink([&](const Case& c) {
        ++report.cases;
        if (!law.check(c)) {
            falsified = c;
            return false;
        }
        return true;
    });
    auto start = std::chrono::steady_clock::now();
    try {
        law.generate(config, sink);
    } catch (const detail::StopGeneration&) {
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    report.phases = sink.phases();
    report.counterexample = falsified;
    report.passed = law.kind == LawKind::Universal ? !falsified.has_value()
                                                   : falsified.has_value();
    return report;
}

inline LawReport run_law(const std::string& id, const LawConfig& config) {
    return run_law(find_law(id), config);
}

inline std::vector<LawReport> run_all(const LawConfig& config) {
    std::vector<LawReport> out;
    for (const auto& law : registry()) {
        out.push_back(run_law(law, config));
    }
    return out;
}

/// Re-evaluates a reported counterexample; true when it still falsifies.
inline bool replay_falsifies(const LawReport& report) {
    return report.counterexample && !find_law(report.id).check(*report.counterexample);
}

namespace detail {
inline std::string quoted(const std::string& s) {
    std::string out;
    vickset::detail::append_quoted(out, s);
    return out;
}
}  // namespace detail

/// One line per law, `key=value` fields. Timing is deliberately absent so the
/// record is reproducible byte-for-byte.
inline std::string render_report(const LawReport& r) {
    std::string out = "law=" + r.id;
    out += " status=";
    out += r.passed ? "pass" : "fail";
    out += " kind=";
    out += r.kind == LawKind::Universal ? "universal" : "existential";
    out += " profile=";
    out += profile_name(r.config.profile);
    out += " seed=" + std::to_string(r.config.seed);
    out += " cases=" + std::to_string(r.cases);
    out += " phases=";
    for (std::size_t k = 0; k < r.phases.size(); ++k) {
        if (k > 0) {
            out += ",";
        }
        out += r.phases[k].first + ":" + std::to_string(r.phases[k].second);
    }
    out += " statement=" + detail::quoted(r.statement);
    out += r.kind == LawKind::Universal ? " counterexample=" : " witness=";
    out += r.counterexample ? detail::quoted(case_text(*r.counterexample)) : "none";
    return out;
}

}  // namespace vickset::laws
