#include "rspin/suites.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>

#include "rspin/automorphisms.hpp"
#include "rspin/oracle.hpp"
#include "rspin/products.hpp"
#include "rspin/window.hpp"

namespace rspin {

void SuiteResult::merge(SuiteResult other) {
  cases += other.cases;
  for (std::string& f : other.failures) failures.push_back(std::move(f));
}

std::vector<std::pair<int, int>> exponent_pairs(int l) {
  std::vector<std::pair<int, int>> out{{0, 0}};
  for (int i = 1; i < l; ++i) out.emplace_back(i, l - i);
  return out;
}

namespace {

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

// Top-tier exponents (i_r, j_r) with gcd(j_r, l) = 1.
std::vector<std::pair<int, int>> top_tiers(int l) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [i, j] : exponent_pairs(l)) {
    if (std::gcd(j, l) == 1) out.emplace_back(i, j);
  }
  return out;
}

std::string pair_name(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Runs body(key) for each key, possibly on several threads, and merges in key order.
SuiteResult partitioned(std::string name, int first, int last,
                        const std::function<SuiteResult(int)>& body, SuiteOptions options) {
  std::vector<SuiteResult> parts;
  if (options.workers <= 1) {
    for (int key = first; key <= last; ++key) parts.push_back(body(key));
  } else {
    std::vector<std::future<SuiteResult>> pending;
    for (int key = first; key <= last; ++key) {
      pending.push_back(std::async(std::launch::async, body, key));
      if (pending.size() >= options.workers) {
        for (auto& f : pending) parts.push_back(f.get());
        pending.clear();
      }
    }
    for (auto& f : pending) parts.push_back(f.get());
  }
  SuiteResult result{std::move(name), 0, {}};
  for (SuiteResult& part : parts) result.merge(std::move(part));
  return result;
}

// Records an exception thrown by one instance as a failure instead of aborting the suite.
void guarded(SuiteResult& out, const std::string& instance, const std::function<void()>& body) {
  ++out.cases;
  try {
    body();
  } catch (const Error& e) {
    out.failures.push_back(instance + ": " + e.what());
  }
}

FieldConfig config_for(int level, const SuiteOptions& options) {
  if (options.field_prime) return FieldConfig(*options.field_prime, level);
  return FieldConfig::for_level(level);
}

bool same_map(const GeneratorMap& a, const GeneratorMap& b) {
  return a.target() == b.target() && a.images() == b.images();
}

}  // namespace

SuiteResult well_definedness_suite(int max_l, SuiteOptions options) {
  return partitioned(
      "well-definedness", 1, max_l,
      [options](int l) {
        SuiteResult out;
        const Field field = config_for(l, options).field();
        for (const auto& [i, j] : exponent_pairs(l)) {
          for (const auto& [i2, j2] : exponent_pairs(l)) {
            const std::string instance =
                "l=" + std::to_string(l) + " " + pair_name(i, j) + "x" + pair_name(i2, j2);
            guarded(out, instance, [&] {
              GeneratorMap map = product_map(i, j, i2, j2, l, field);
              const Certificate c = check_well_defined(map);
              if (!c) out.failures.push_back(instance + ": " + c.to_string());
              const bool case2 = i > 0 && i2 > 0 && i + i2 < l;
              if (case2 && i != i2) {
                // The swapped images t^{i'} nu2, t^{i} nu2 must be rejected.
                const ModuleElement a = map.image(1);
                map.set_image(1, map.image(2));
                map.set_image(2, a);
                if (map.certify()) {
                  out.failures.push_back(instance + ": swapped case-2 images were accepted");
                }
              }
            });
          }
        }
        return out;
      },
      options);
}

SuiteResult product_law_suite(int max_l, SuiteOptions options) {
  return partitioned(
      "commutativity-associativity", 1, max_l,
      [options](int l) {
        SuiteResult out;
        const Field field = config_for(l, options).field();
        const auto pairs = exponent_pairs(l);
        for (const auto& [i, j] : pairs) {
          for (const auto& [i2, j2] : pairs) {
            const std::string instance =
                "l=" + std::to_string(l) + " " + pair_name(i, j) + "x" + pair_name(i2, j2);
            guarded(out, instance + " commutativity", [&] {
              const GeneratorMap ab = product_map(i, j, i2, j2, l, field);
              const GeneratorMap ba = product_map(i2, j2, i, j, l, field);
              for (int p = 1; p <= 2; ++p) {
                for (int q = 1; q <= 2; ++q) {
                  if (!(ab.image_tensor(p, q) == ba.image_tensor(q, p))) {
                    out.failures.push_back(instance +
                                           ": product differs from its swap on generator (" +
                                           std::to_string(p) + "," + std::to_string(q) + ")");
                  }
                }
              }
            });
            for (const auto& [i3, j3] : pairs) {
              const std::string triple = instance + "x" + pair_name(i3, j3);
              guarded(out, triple + " associativity", [&] {
                const GeneratorMap ab = product_map(i, j, i2, j2, l, field);
                const GeneratorMap bc = product_map(i2, j2, i3, j3, l, field);
                const ModulePresentation& abt = ab.target();
                const ModulePresentation& bct = bc.target();
                const GeneratorMap ab_c = product_map(abt.i, abt.j, i3, j3, l, field);
                const GeneratorMap a_bc = product_map(i, j, bct.i, bct.j, l, field);
                const ModulePresentation a = module_make(i, j, l);
                const ModulePresentation c = module_make(i3, j3, l);
                for (int p = 1; p <= 2; ++p) {
                  for (int q = 1; q <= 2; ++q) {
                    for (int s = 1; s <= 2; ++s) {
                      const ModuleElement left = apply_bilinear(
                          ab_c, ab.image_tensor(p, q), ModuleElement::generator(c, field, s));
                      const ModuleElement right = apply_bilinear(
                          a_bc, ModuleElement::generator(a, field, p), bc.image_tensor(q, s));
                      if (!(left == right)) {
                        out.failures.push_back(triple + ": bracketings differ on (" +
                                               std::to_string(p) + "," + std::to_string(q) + "," +
                                               std::to_string(s) + "): " + left.to_string() +
                                               " vs " + right.to_string());
                      }
                    }
                  }
                }
              });
            }
          }
        }
        return out;
      },
      options);
}

SuiteResult power_coherence_suite(int max_r, SuiteOptions options) {
  return partitioned(
      "power-map coherence", 1, max_r,
      [options](int r) {
        SuiteResult out;
        const Field field = config_for(r, options).field();
        const std::vector<int> divs = divisors(r);
        for (int l : divs) {
          for (const auto& [i_r, j_r] : top_tiers(l)) {
            const std::string node = "r=" + std::to_string(r) + " l=" + std::to_string(l) +
                                     " top " + pair_name(i_r, j_r);
            for (int d : divs) {
              for (int e : divs) {
                if (d % e != 0) continue;
                const std::string instance =
                    node + " c_{" + std::to_string(d) + "->" + std::to_string(e) + "}";
                guarded(out, instance, [&] {
                  const GeneratorMap map = power_map(d, e, i_r, j_r, l, r, field);
                  const TierIndex from = tier_twists(i_r, j_r, l, r, d);
                  const int m = d / e;
                  for (int k = 0; k <= m; ++k) {
                    const ModuleElement iterated =
                        iterated_product(from.i, from.j, l, m - k, k, field);
                    if (!(iterated == map.image_symmetric(k))) {
                      out.failures.push_back(
                          instance + ": iterated product differs at k=" + std::to_string(k) + ": " +
                          iterated.to_string() + " vs " + map.image_symmetric(k).to_string());
                    }
                  }
                });
              }
            }
            for (int d2 : divs) {
              for (int d1 : divs) {
                for (int d0 : divs) {
                  if (d2 % d1 != 0 || d1 % d0 != 0) continue;
                  const std::string instance = node + " chain (" + std::to_string(d2) + "," +
                                               std::to_string(d1) + "," + std::to_string(d0) + ")";
                  guarded(out, instance, [&] {
                    if (!compatibility_check(d2, d1, d0, i_r, j_r, l, r, field)) {
                      out.failures.push_back(instance +
                                             ": composition differs from direct power map");
                    }
                  });
                }
              }
            }
          }
        }
        return out;
      },
      options);
}

SuiteResult cokernel_suite(int max_r, SuiteOptions options) {
  return partitioned(
      "cokernel lengths", 1, max_r,
      [options](int r) {
        SuiteResult out;
        const Field field = config_for(r, options).field();
        const std::vector<int> divs = divisors(r);
        for (int l : divs) {
          for (const auto& [i_r, j_r] : top_tiers(l)) {
            for (int d : divs) {
              for (int e : divs) {
                if (d % e != 0) continue;
                const std::string instance = "r=" + std::to_string(r) + " l=" + std::to_string(l) +
                                             " top " + pair_name(i_r, j_r) + " c_{" +
                                             std::to_string(d) + "->" + std::to_string(e) + "}";
                guarded(out, instance, [&] {
                  const GeneratorMap map = power_map(d, e, i_r, j_r, l, r, field);
                  const bool free_tier = tier_twists(i_r, j_r, l, r, d).is_free();
                  const std::size_t expected = free_tier ? 0 : static_cast<std::size_t>(d / e - 1);
                  const std::size_t got = cokernel_length(map, TMode::specialized(0));
                  if (got != expected) {
                    out.failures.push_back(instance + ": length " + std::to_string(got) +
                                           ", expected " + std::to_string(expected));
                  }
                });
              }
            }
          }
        }
        return out;
      },
      options);
}

SuiteResult localization_suite(int max_l, SuiteOptions options) {
  return partitioned(
      "localized agreement", 1, max_l,
      [options](int l) {
        SuiteResult out;
        const Field field = config_for(l, options).field();
        for (const auto& [i, j] : exponent_pairs(l)) {
          for (const auto& [i2, j2] : exponent_pairs(l)) {
            const std::string instance =
                "l=" + std::to_string(l) + " " + pair_name(i, j) + "x" + pair_name(i2, j2);
            guarded(out, instance, [&] {
              const GeneratorMap map = product_map(i, j, i2, j2, l, field);
              for (Chart chart : {Chart::x, Chart::y}) {
                if (!localized_agreement(map, chart)) {
                  out.failures.push_back(instance +
                                         ": not the tensor isomorphism after inverting " +
                                         (chart == Chart::x ? "x" : "y"));
                }
              }
            });
          }
        }
        return out;
      },
      options);
}

SuiteResult automorphism_suite(int max_r, SuiteOptions options) {
  return partitioned(
      "automorphism orders", 1, max_r,
      [options](int r) {
        SuiteResult out;
        const FieldConfig config = config_for(r, options);
        for (int l : divisors(r)) {
          if (l < 2) continue;
          for (const auto& [i, j] : exponent_pairs(l)) {
            if (i == 0) continue;
            for (int e : divisors(r)) {
              const std::string instance = "r=" + std::to_string(r) + " l=" + std::to_string(l) +
                                           " " + pair_name(i, j) + " e=" + std::to_string(e);
              guarded(out, instance, [&] {
                const auto ue = static_cast<std::size_t>(e);
                const AutomorphismGroup generic =
                    automorphisms(i, j, l, e, TMode::generic(), true, config);
                const AutomorphismGroup connected =
                    automorphisms(i, j, l, e, TMode::specialized(0), false, config);
                const AutomorphismGroup split =
                    automorphisms(i, j, l, e, TMode::specialized(0), true, config);
                if (generic.order() != ue || !generic.is_diagonal()) {
                  out.failures.push_back(instance + ": generic order " +
                                         std::to_string(generic.order()));
                }
                if (connected.order() != ue || !connected.is_diagonal()) {
                  out.failures.push_back(instance + ": connected order " +
                                         std::to_string(connected.order()));
                }
                if (split.order() != ue * ue) {
                  out.failures.push_back(instance + ": disconnected order " +
                                         std::to_string(split.order()));
                }
              });
            }
          }
        }
        return out;
      },
      options);
}

SuiteResult duality_suite(int max_l, SuiteOptions options) {
  return partitioned(
      "duality", 1, max_l,
      [options](int l) {
        SuiteResult out;
        const Field field = config_for(l, options).field();
        for (const auto& [i, j] : exponent_pairs(l)) {
          const std::string instance = "l=" + std::to_string(l) + " " + pair_name(i, j);
          guarded(out, instance, [&] {
            const GeneratorMap pairing = dual_pairing(i, j, l, field);
            if (!pairing.target().is_free()) {
              out.failures.push_back(instance + ": pairing does not land in E_{0,0}");
              return;
            }
            // After inverting x both modules are free on their first generator; the pairing is
            // perfect iff that generator pair maps to a unit and the rest follows bilinearly.
            const LaurentElement value = localized_coordinate(pairing.image_tensor(1, 1), Chart::x);
            if (!value.is_unit() || !localized_agreement(pairing, Chart::x)) {
              out.failures.push_back(instance +
                                     ": pairing is not perfect after inverting x (value " +
                                     value.to_string() + ")");
            }
          });
        }
        return out;
      },
      options);
}

SuiteResult resolution_suite(int max_degree, SuiteOptions options) {
  SuiteResult out{"resolution exactness", 0, {}};
  const Field field = config_for(1, options).field();
  for (int d = 0; d <= max_degree; ++d) {
    guarded(out, "D=" + std::to_string(d), [&] {
      if (!resolution_exact_check(d, field)) {
        out.failures.push_back("D=" + std::to_string(d) + ": sequence not exact");
      }
    });
  }
  return out;
}

SuiteResult window_suite(int max_r, SuiteOptions options) {
  return partitioned(
      "algebra window", 1, max_r,
      [options](int r) {
        SuiteResult out;
        const Field field = config_for(r, options).field();
        for (int l : divisors(r)) {
          for (const auto& [i, j] : top_tiers(l)) {
            const std::string instance =
                "r=" + std::to_string(r) + " l=" + std::to_string(l) + " " + pair_name(i, j);
            guarded(out, instance, [&] {
              const AlgebraWindow w = algebra_window(i, j, l, r, r, field);
              if (!w.unit_laws_hold()) out.failures.push_back(instance + ": unit laws fail");
              if (const auto f = w.associativity_failure())
                out.failures.push_back(instance + ": " + *f);
            });
          }
        }
        return out;
      },
      options);
}

SuiteResult oracle_suite(int max_l, int max_r, SuiteOptions options) {
  SuiteResult products = partitioned(
      "oracle", 1, max_l,
      [options](int l) {
        SuiteResult out;
        const Field field = config_for(l, options).field();
        for (const auto& [i, j] : exponent_pairs(l)) {
          for (const auto& [i2, j2] : exponent_pairs(l)) {
            const std::string instance =
                "l=" + std::to_string(l) + " product " + pair_name(i, j) + "x" + pair_name(i2, j2);
            guarded(out, instance, [&] {
              const GeneratorMap map = product_map(i, j, i2, j2, l, field);
              const GeneratorMap oracle = oracle_product_map(i, j, i2, j2, l, field);
              if (!same_map(map, oracle)) {
                out.failures.push_back(instance + ": differs from the monomial model");
              }
            });
          }
        }
        return out;
      },
      options);
  SuiteResult powers = partitioned(
      "oracle", 1, max_r,
      [options](int r) {
        SuiteResult out;
        const Field field = config_for(r, options).field();
        const std::vector<int> divs = divisors(r);
        for (int l : divs) {
          for (const auto& [i_r, j_r] : top_tiers(l)) {
            for (int d : divs) {
              for (int e : divs) {
                if (d % e != 0) continue;
                const std::string instance = "r=" + std::to_string(r) + " l=" + std::to_string(l) +
                                             " top " + pair_name(i_r, j_r) + " c_{" +
                                             std::to_string(d) + "->" + std::to_string(e) + "}";
                guarded(out, instance, [&] {
                  const GeneratorMap map = power_map(d, e, i_r, j_r, l, r, field);
                  const GeneratorMap oracle = oracle_power_map(d, e, i_r, j_r, l, r, field);
                  if (!same_map(map, oracle)) {
                    out.failures.push_back(instance + ": differs from the monomial model");
                  }
                });
              }
            }
          }
        }
        return out;
      },
      options);
  products.merge(std::move(powers));
  return products;
}

SuiteBounds bounds_for_max_r(int max_r) {
  if (max_r < 1) throw Error("verify-algebra: --max-r must be positive");
  SuiteBounds b;
  b.max_r = max_r;
  b.max_l = std::min(max_r, 10);
  b.max_law_l = std::min(max_r, 6);
  b.max_window_r = std::min(max_r, 6);
  return b;
}

std::vector<SuiteResult> run_all_suites(const SuiteBounds& bounds, SuiteOptions options) {
  std::vector<SuiteResult> out;
  out.push_back(well_definedness_suite(bounds.max_l, options));
  out.push_back(product_law_suite(bounds.max_law_l, options));
  out.push_back(power_coherence_suite(bounds.max_r, options));
  out.push_back(cokernel_suite(bounds.max_r, options));
  out.push_back(localization_suite(bounds.max_l, options));
  out.push_back(automorphism_suite(bounds.max_r, options));
  out.push_back(duality_suite(bounds.max_l, options));
  out.push_back(resolution_suite(bounds.max_degree, options));
  out.push_back(window_suite(bounds.max_window_r, options));
  out.push_back(oracle_suite(bounds.max_l, bounds.max_r, options));
  return out;
}

}  // namespace rspin
