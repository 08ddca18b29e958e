#include "singraph/report.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "singraph/errors.hpp"
#include "singraph/linalg.hpp"

namespace sg {

using nlohmann::json;

namespace {

void require_agree(const char* what, std::size_t a, const char* route_a, std::size_t b, const char* route_b) {
  if (a != b)
    throw InconsistencyError(std::string(what) + ": " + route_a + " gives " + std::to_string(a) + ", " + route_b +
                             " gives " + std::to_string(b));
}

json subset_json(const GroupSubset& s) { return s.members(); }

// Observe mode: the min(|X|,|Y|) bound is logged, never enforced.
void observe_bound(const BalanceCertificate& c, std::size_t nullity, json& out, Diagnostics& diag) {
  const std::size_t bound = std::min(c.x.size(), c.y.size());
  out["bound"] = bound;
  out["bound_holds"] = bound <= nullity;
  if (bound > nullity)
    diag.findings.push_back("balance bound min(|X|,|Y|) = " + std::to_string(bound) + " exceeds nullity " +
                            std::to_string(nullity));
}

json certificate_section(const Graph& g, std::size_t nullity, Diagnostics& diag) {
  json out;
  try {
    auto c = extract_balance_certificate(g);
    if (!c) return nullptr;
    out["certificate"] = to_json(*c);
    out["verified"] = verify_balance_certificate(g, *c);
    if (!out["verified"].get<bool>()) throw InconsistencyError("extracted balance certificate does not verify");
    observe_bound(*c, nullity, out, diag);
  } catch (const OneSignedKernel& e) {
    const std::string msg = e.what();
    diag.findings.push_back(msg);
    out["certificate"] = nullptr;
    out["error"] = msg;
  }
  return out;
}

}  // namespace

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

json analyze_nullity(const Graph& g, Diagnostics& diag) {
  const IntMatrix a = g.adjacency_matrix();
  const std::size_t r = rank(a);
  const std::size_t null = g.order() - r;
  json out;
  out["input"] = g.to_json();
  out["rank"] = r;
  out["nullity"] = null;
  out["singular"] = null > 0;
  out["routes"] = {{"rank", null}};
  if (auto k = regularity(g)) {
    out["regular"] = *k;
    if (g.order() >= 2) {
      // -1 multiplicity of the complement via nullity(Abar + I); for symmetric
      // matrices geometric and algebraic multiplicities agree.
      const IntMatrix shifted = complement(g).adjacency_matrix() + IntMatrix::identity(g.order());
      const std::size_t minus_one = nullity(shifted);
      out["complement_minus_one_multiplicity"] = minus_one;
      if ((minus_one > 0) != (null > 0))
        throw InconsistencyError("complement criterion disagrees with rank for a regular graph");
    }
  } else {
    out["regular"] = nullptr;
  }
  if (auto d = duplicate_neighborhood_certificate(g)) {
    out["duplicate_neighborhood"] = {d->first, d->second};
    if (null == 0) throw InconsistencyError("duplicate neighbourhoods found in a non-singular graph");
  } else {
    out["duplicate_neighborhood"] = nullptr;
  }
  out["balance"] = null > 0 ? certificate_section(g, null, diag) : json(nullptr);
  out["warnings"] = diag.warnings;
  out["findings"] = diag.findings;
  return out;
}

json analyze_circulant(const CirculantSpec& spec, bool with_spectrum, Diagnostics& diag) {
  json out;
  out["input"] = spec.to_json();
  out["psi"] = circulant_psi(spec).to_string();
  const CirculantNullity cn = circulant_nullity(spec);
  out["nullity"] = cn.nullity;
  out["singular"] = cn.nullity > 0;
  out["divisors"] = cn.divisors;
  out["routes"] = {{"cyclotomic", cn.nullity}};
  out["connected"] = spec.connected();

  if (!spec.connected()) {
    std::size_t d = spec.n();
    for (std::size_t m : spec.hstar()) d = std::gcd(d, m);
    diag.warnings.push_back("H* does not generate Z_" + std::to_string(spec.n()) + "; the graph has " +
                            std::to_string(d) + " isomorphic components");
    std::vector<std::size_t> sub;
    for (std::size_t m : spec.hstar()) sub.push_back(m / d);
    const CirculantSpec comp(spec.n() / d, sub);
    const CirculantNullity cc = circulant_nullity(comp);
    out["components"] = {{"count", d}, {"component", comp.to_json()}, {"component_nullity", cc.nullity}};
    require_agree("componentwise circulant nullity", cn.nullity, "whole graph", d * cc.nullity, "components");
  } else {
    out["components"] = nullptr;
  }

  if (spec.n() <= kRankCrossCheckLimit) {
    const std::size_t rn = nullity(spec.graph().adjacency_matrix());
    out["routes"]["rank"] = rn;
    require_agree("circulant nullity", cn.nullity, "cyclotomic", rn, "rank");
  }
  if (auto w = root_coset_witness(spec)) {
    out["root_coset_witness"] = {{"character", w->character}, {"subgroup_order", w->subgroup_order}};
    if (cn.nullity == 0) throw InconsistencyError("root-of-unity coset witness for a non-singular circulant");
  } else {
    out["root_coset_witness"] = nullptr;
  }
  if (with_spectrum) {
    const CharacterSpectrum s = circulant_spectrum(spec);
    out["spectrum"] = s.to_json();
    require_agree("circulant nullity", cn.nullity, "cyclotomic", s.multiplicity_of_zero(), "spectrum");
  }
  out["warnings"] = diag.warnings;
  return out;
}

json analyze_cayley(const FiniteGroup& g, const GroupSubset& h, const std::optional<CharacterTable>& table,
                    Diagnostics& diag) {
  json out;
  out["input"] = {{"order", g.order()}, {"hset", subset_json(h)}};
  const ConnectingSetReport cs = is_connecting_set(g, h);
  out["connecting_set"] = {{"ok", cs.ok()},
                           {"generates", cs.generates},
                           {"symmetric", cs.symmetric},
                           {"excludes_identity", cs.excludes_identity},
                           {"description", cs.describe()}};
  const Graph cay = cayley_graph(g, h);
  if (!cs.generates)
    diag.warnings.push_back("H generates a subgroup of order " + std::to_string(cs.generated.size()) +
                            "; the Cayley graph is disconnected");
  const std::size_t rn = nullity(cay.adjacency_matrix());
  out["nullity"] = rn;
  out["singular"] = rn > 0;
  out["routes"] = {{"rank", rn}};
  out["normal"] = is_normal_subset(g, h);

  const GroupSubset k = left_stabilizer(g, h);
  out["stabilizer"] = subset_json(k);
  if (auto td = tensor_decompose(g, h)) {
    json cosets = json::array();
    for (const auto& c : td->cosets) cosets.push_back(subset_json(c));
    out["tensor_decomposition"] = {{"cosets", cosets}, {"quotient", td->quotient.to_json()}, {"verified", true}};
  } else {
    out["tensor_decomposition"] = nullptr;
  }
  if (auto b = coset_nullity_bound(g, h))
    out["coset_bound"] = *b;
  else
    out["coset_bound"] = nullptr;

  if (table) {
    validate_character_table(*table, g);
    if (auto c = coset_vanishing_certificate(g, h, *table))
      out["coset_vanishing_certificate"] = {
          {"stabilizer", subset_json(c->stabilizer)}, {"character", c->character}, {"witness", c->witness}};
    else
      out["coset_vanishing_certificate"] = nullptr;

    json vanishing = json::array();
    for (std::size_t i = 0; i < table->characters.size(); ++i) {
      const auto& chi = table->characters[i];
      if (!is_vanishing(h, chi)) continue;
      vanishing.push_back({{"character", i}, {"degree", chi.degree}, {"bound", chi.degree * chi.degree}});
    }
    out["vanishing_characters"] = vanishing;

    if (out["normal"].get<bool>() && table->complete(g)) {
      const CharacterSpectrum s = character_sum_spectrum(g, h, *table);
      out["spectrum"] = s.to_json();
      out["routes"]["character-sum"] = s.multiplicity_of_zero();
      require_agree("Cayley nullity", rn, "rank", s.multiplicity_of_zero(), "character-sum");
      // Character criterion, both directions, plus the chi(1)^2 bound.
      if ((rn > 0) != !vanishing.empty())
        throw InconsistencyError("character criterion: singularity and vanishing sums disagree");
      for (const auto& v : vanishing)
        if (v["bound"].get<std::size_t>() > rn)
          throw InconsistencyError("character criterion: nullity below chi(1)^2");
    } else {
      out["spectrum"] = nullptr;
      if (!out["normal"].get<bool>())
        diag.warnings.push_back("H is not a normal subset; character-sum spectrum skipped");
      else
        diag.warnings.push_back("character table is incomplete; character-sum spectrum skipped");
    }
  }
  out["warnings"] = diag.warnings;
  return out;
}

json analyze_tau(const Graph& g, const GroupAction& action, const CharacterTable& table, std::size_t moment_depth,
                 Diagnostics& diag) {
  action.check_automorphisms(g);
  validate_character_table(table, action.group());
  if (!table.complete(action.group())) throw InputError("character table is incomplete");
  json out;
  out["input"] = {{"graph", g.to_json()}, {"group_order", action.group().order()}};
  out["transitive"] = action.is_transitive();
  if (!action.is_transitive()) diag.warnings.push_back("the action is not transitive");

  const ClassFunction t = tau(action, g);
  json tau_json = json::array();
  for (const auto& v : t) tau_json.push_back(integer_to_json(v.rational_value().get_num()));
  out["tau"] = tau_json;
  if (!is_class_function(action.group(), t)) throw InconsistencyError("tau is not a class function");

  // Validates that every <psi, chi> is a non-negative integer.
  const bool mf = is_multiplicity_free(action, table);
  const ClassFunction psi = permutation_character(action);
  json decomposition = json::array();
  std::vector<std::size_t> mult;
  for (const auto& chi : table.characters) {
    const Rational q = inner_product(psi, chi).rational_value();
    mult.push_back(q.get_num().get_ui());
    decomposition.push_back(integer_to_json(q.get_num()));
  }
  out["psi_decomposition"] = decomposition;
  const std::size_t rn = nullity(g.adjacency_matrix());
  out["routes"] = {{"rank", rn}};
  out["nullity"] = rn;
  out["singular"] = rn > 0;

  out["multiplicity_free"] = mf;
  if (mf) {
    const TauSpectrum ts = spectrum_via_tau(action, g, table);
    out["spectrum"] = ts.spectrum.to_json();
    out["routes"]["tau"] = ts.nullity;
    out["moments"] = nullptr;
    out["refused"] = nullptr;
  } else {
    out["spectrum"] = nullptr;
    out["refused"] = "the permutation character is not multiplicity free";
    json moments = json::array();
    for (std::size_t i = 0; i < table.characters.size(); ++i) {
      if (mult[i] == 0) continue;
      const std::size_t r = moment_depth > 0 ? moment_depth : mult[i];
      json vals = json::array();
      for (const auto& z : character_moments(action, g, table, i, r)) vals.push_back(to_json(z));
      moments.push_back({{"character", i}, {"multiplicity_in_psi", mult[i]}, {"moments", vals}});
    }
    out["moments"] = moments;
  }
  out["warnings"] = diag.warnings;
  return out;
}

json analyze_certify(const Graph& g, const std::optional<BalanceCertificate>& cert, Diagnostics& diag) {
  json out;
  out["input"] = g.to_json();
  const std::size_t null = nullity(g.adjacency_matrix());
  out["nullity"] = null;
  if (cert) {
    out["mode"] = "verify";
    out["certificate"] = to_json(*cert);
    const bool ok = verify_balance_certificate(g, *cert);
    out["verified"] = ok;
    if (ok) {
      if (null == 0) throw InconsistencyError("a verified balance certificate for a non-singular graph");
      observe_bound(*cert, null, out, diag);
    }
  } else {
    out["mode"] = "extract";
    if (null == 0) {
      out["certificate"] = nullptr;
      out["verified"] = nullptr;
    } else {
      json sec = certificate_section(g, null, diag);
      for (auto& [key, val] : sec.items()) out[key] = val;
      if (!out.contains("verified")) out["verified"] = nullptr;
    }
  }
  out["findings"] = diag.findings;
  return out;
}

SweepResult sweep_circulants(const SweepOptions& opts, Diagnostics& diag) {
  if (opts.from < 2 || opts.to < opts.from) throw InputError("sweep: need 2 <= A <= B");
  const std::size_t limit = opts.max_n.value_or(kDefaultSweepLimit);
  if (opts.to > limit && !opts.force)
    throw InputError("sweep: B = " + std::to_string(opts.to) + " exceeds the guardrail " + std::to_string(limit) +
                     " (enumeration doubles with every exponent pair); pass --force or raise SG_MAX_N");
  std::ostringstream csv;
  csv << "n,hstar,connected,nullity_cyclotomic,nullity_rank,divisors\n";
  json per_n = json::array();
  std::size_t instances = 0, agreements = 0, singular_total = 0;
  for (std::size_t n = opts.from; n <= opts.to; ++n) {
    if (opts.primes_only && !is_prime(n)) continue;
    std::size_t count = 0, connected = 0, singular = 0, singular_connected = 0;
    for (const CirculantSpec& spec : enumerate_circulants(n, false)) {
      const CirculantNullity cn = circulant_nullity(spec);
      const std::size_t rn = nullity(spec.graph().adjacency_matrix());
      require_agree(("sweep n=" + std::to_string(n)).c_str(), cn.nullity, "cyclotomic", rn, "rank");
      const bool conn = spec.connected();
      if (is_prime(n) && conn && cn.nullity != 0)
        throw InconsistencyError("connected circulant of prime order " + std::to_string(n) + " is singular");
      ++count;
      ++agreements;
      connected += conn;
      singular += cn.nullity > 0;
      singular_connected += conn && cn.nullity > 0;
      csv << n << ",\"";
      for (std::size_t i = 0; i < spec.hstar().size(); ++i) csv << (i ? " " : "") << spec.hstar()[i];
      csv << "\"," << (conn ? 1 : 0) << ',' << cn.nullity << ',' << rn << ",\"";
      for (std::size_t i = 0; i < cn.divisors.size(); ++i) csv << (i ? " " : "") << cn.divisors[i];
      csv << "\"\n";
    }
    instances += count;
    singular_total += singular;
    per_n.push_back({{"n", n},
                     {"instances", count},
                     {"connected", connected},
                     {"singular", singular},
                     {"singular_connected", singular_connected},
                     {"prime", is_prime(n)}});
  }
  SweepResult r;
  r.summary = {{"family", "circulant"},
               {"range", {opts.from, opts.to}},
               {"primes_only", opts.primes_only},
               {"instances", instances},
               {"routes_agree", agreements == instances},
               {"singular", singular_total},
               {"per_n", per_n},
               {"warnings", diag.warnings}};
  r.csv = csv.str();
  return r;
}

}  // namespace sg
