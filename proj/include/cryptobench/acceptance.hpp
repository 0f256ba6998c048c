#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cryptobench/algebra/bigint.hpp"
#include "cryptobench/algebra/gf2n.hpp"
#include "cryptobench/algebra/zmod.hpp"
#include "cryptobench/boolfun.hpp"
#include "cryptobench/bundle.hpp"
#include "cryptobench/classical/hamming.hpp"
#include "cryptobench/classical/qam.hpp"
#include "cryptobench/classical/rotor.hpp"
#include "cryptobench/curl27.hpp"
#include "cryptobench/curl27_attack.hpp"
#include "cryptobench/lattice.hpp"
#include "cryptobench/protocols.hpp"
#include "cryptobench/report.hpp"
#include "cryptobench/sharing.hpp"
#include "cryptobench/slp.hpp"
#include "cryptobench/twinpeaks.hpp"
#include "cryptobench/util/random.hpp"

namespace cryptobench::acceptance {

struct Options {
  std::uint64_t seed = 42;
  unsigned workers = 1;
  bool long_mode = false;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  Report::Status status = Report::Status::fail;
  std::string detail;
  double seconds = 0;  // kept out of the report on purpose
};

struct Run {
  Report report;
  std::vector<CriterionResult> criteria;
};

namespace detail {

struct Outcome {
  Report::Status status;
  std::string detail;
};

inline Outcome pass_if(bool ok, std::string detail) {
  return {ok ? Report::Status::pass : Report::Status::fail, std::move(detail)};
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

// Each criterion gets its own stream so that adding draws to one never
// shifts another.
inline SplitMix64 stream(const Options& o, int id) { return SplitMix64::at(o.seed, 1000 + id); }

// 1 -------------------------------------------------------------------------
inline Outcome known_collision(const Options&) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::string> ls = bundle::lines(bundle::asset("collision"));
  if (ls.size() != 2) return {Report::Status::fail, "collision asset needs two lines"};
  const curl27::TritString x = curl27::parse_fragment_notation(ls[0]);
  const curl27::TritString x2 = curl27::parse_fragment_notation(ls[1]);
  const curl27::TritString h = curl27::curl_hash(x), h2 = curl27::curl_hash(x2);
  const bool ok = x != x2 && h == h2 && h.size() == curl27::kWordTrits;
  const bool fast = seconds_since(t0) < 1.0;
  return pass_if(ok && fast, cat("length=", x.size(), " digests_equal=", h == h2,
                                 " under_1s=", fast));
}

// 2 -------------------------------------------------------------------------
inline Outcome curl_invariants(const Options& o) {
  SplitMix64 rng = stream(o, 2);
  auto random_trit = [&] { return static_cast<Trit>(static_cast<int>(rng.below(3)) - 1); };
  std::size_t failures = 0, total = 0;
  for (std::size_t m : {3u, 9u, 27u, 81u, 243u}) {
    for (int trial = 0; trial < 1000; ++trial) {
      curl27::CurlState s;
      auto w = s.trits();
      for (std::size_t i = 0; i < w.size(); i += m) std::fill_n(w.begin() + i, m, random_trit());
      s = curl27::curlf(s);
      ++total;
      if (!curl27::is_fragmented(s.trits(), m)) ++failures;
    }
  }
  for (int trial = 0; trial < 1000; ++trial) {
    curl27::CurlState s;
    for (std::size_t word = 0; word < 3; ++word) {
      const Trit abc[3] = {random_trit(), random_trit(), random_trit()};
      auto w = s.word(word);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = abc[i % 3];
    }
    s = curl27::curlf(s);
    ++total;
    for (std::size_t word = 0; word < 3; ++word) {
      if (!curl27::is_expanded3(s.word(word))) {
        ++failures;
        break;
      }
    }
  }
  return pass_if(failures == 0, cat("states=", total, " failures=", failures));
}

// 3 -------------------------------------------------------------------------
inline Outcome live_collision(const Options& o) {
  if (!o.long_mode) return {Report::Status::skip, "long"};
  const auto t0 = std::chrono::steady_clock::now();
  curl27::CollisionSearchOptions opts;
  opts.fragment = 9;
  opts.budget = 8'000'000;
  opts.seed = o.seed;
  opts.workers = o.workers;
  try {
    const curl27::CollisionSearchResult r = curl27::fragmentation_collision_attack(opts);
    const bool verified = curl27::verify_collision(r.first, r.second);
    const bool fast = seconds_since(t0) < 3600.0;
    return pass_if(verified && fast, cat("hashes=", r.hashes, " verified=", verified,
                                         " under_60min=", fast));
  } catch (const BudgetExhausted&) {
    return {Report::Status::fail, "no collision within 8000000 hashes"};
  }
}

// 4 -------------------------------------------------------------------------
// The default run attacks one oracle; --long runs all five.
inline Outcome slide_attack(const Options& o) {
  SplitMix64 rng = stream(o, 4);
  const int instances = o.long_mode ? 5 : 1;
  std::uint64_t traffic = 0;
  int correct = 0;
  double slowest = 0;
  for (int i = 0; i < instances; ++i) {
    twinpeaks::LocalOracle oracle = twinpeaks::LocalOracle::from_seed(rng());
    const twinpeaks::Block128 x{static_cast<std::uint32_t>(rng()), static_cast<std::uint32_t>(rng()),
                                static_cast<std::uint32_t>(rng()), static_cast<std::uint32_t>(rng())};
    const twinpeaks::Block128 y = twinpeaks::encrypt(oracle, x);
    const std::uint64_t before = oracle.total_calls();
    const auto t0 = std::chrono::steady_clock::now();
    try {
      if (twinpeaks::slide_attack_decrypt(oracle, y, rng()) == x) ++correct;
    } catch (const BudgetExhausted&) {
    }
    slowest = std::max(slowest, seconds_since(t0));
    traffic += oracle.total_calls() - before;
  }
  const double mean = static_cast<double>(traffic) / instances;
  const double log2_mean = std::log2(mean);
  const bool in_range = mean >= std::ldexp(1.0, 20) && mean <= std::ldexp(1.0, 24);
  const bool fast = slowest < 900.0;
  std::ostringstream lg;
  lg.precision(2);
  lg << std::fixed << log2_mean;
  return pass_if(correct == instances && in_range && fast,
                 cat("instances=", instances, " decrypted=", correct, " log2_mean_traffic=", lg.str(),
                     " under_15min=", fast));
}

// 5 -------------------------------------------------------------------------
inline Outcome rotor(const Options&) {
  const std::string ct = bundle::lines(bundle::asset("rotor_ciphertext")).at(0);
  const auto tables = classical::PositionTables::parse(bundle::asset("rotor_tables"));
  const auto plausible = classical::plausible_rotor_candidates(ct, classical::kRotorCoverageThreshold, tables);
  const bool ok = tables.reflector_property() && plausible.size() == 1 &&
                  plausible[0].key == classical::RotorKey::yellow &&
                  plausible[0].plaintext == "POSTTOTOPOOPSSORRYSTOPROTOR";
  std::string detail = cat("plausible=", plausible.size());
  if (!plausible.empty()) {
    detail += cat(" key=", classical::key_name(plausible[0].key), " text=", plausible[0].plaintext);
  }
  return pass_if(ok, detail);
}

// 6 -------------------------------------------------------------------------
inline std::size_t table_mismatches(const std::map<classical::Codeword, std::size_t>& counts,
                                    const std::string& table, std::size_t& rows) {
  std::size_t bad = 0;
  for (const std::string& line : bundle::lines(table)) {
    std::istringstream fields(line);
    std::string gray, word;
    std::size_t expected = 0;
    fields >> gray >> word >> expected;
    ++rows;
    auto it = counts.find(word);
    const std::size_t got = it == counts.end() ? 0 : it->second;
    if (got != expected) ++bad;
  }
  return bad;
}

inline Outcome qam(const Options&) {
  using namespace classical;
  const CorrectedStream p1 = correct_stream(printed_hex_to_bits(bundle::asset("qam_part1")));
  const CorrectedStream p2 = correct_stream(printed_hex_to_bits(bundle::asset("qam_part2")));
  std::size_t rows = 0;
  const std::size_t bad = table_mismatches(codeword_frequencies(p1.codewords), bundle::asset("qam_table4a"), rows) +
                          table_mismatches(codeword_frequencies(p2.codewords), bundle::asset("qam_table4b"), rows);

  const std::string consonants = apply_substitution(p1.codewords, SubstitutionKey::parse(bundle::asset("qam_key1")));
  const std::string vowels = apply_substitution(p2.codewords, SubstitutionKey::parse(bundle::asset("qam_key2")));
  const std::string text =
      normalize_punctuation(interleave(consonants, vowels, bundle::asset("qam_layout")), "*@");
  const std::string expected = bundle::lines(bundle::asset("qam_plaintext")).at(0);
  const bool plaintext_ok =
      text == expected && text.starts_with("these are the mores of the lunar inhabitants");
  return pass_if(rows == 32 && bad == 0 && plaintext_ok,
                 cat("rows=", rows, " mismatched_rows=", bad, " corrections=", p1.corrections, "+",
                     p2.corrections, " plaintext_match=", plaintext_ok));
}

// 7 -------------------------------------------------------------------------
inline Outcome slp_tables(const Options&) {
  const slp::Polynomial f = slp::parse_polynomial("f2019");
  struct Case {
    const char* asset;
    slp::DigitPolicy policy;
  };
  std::string detail;
  bool ok = true;
  for (const Case& c : {Case{"table6", slp::DigitPolicy::broken}, Case{"table7", slp::DigitPolicy::calc},
                        Case{"table8", slp::DigitPolicy::calc}}) {
    const slp::SlpProgram p = slp::parse_program(bundle::asset(c.asset));
    const bool valid = slp::validate(p, c.policy).ok();
    const bool equal = valid && slp::verify_equivalence(p, f, c.policy).equal;
    ok = ok && valid && equal;
    detail += cat(c.asset, "=", valid ? (equal ? "ok" : "mismatch") : "invalid", " ");
  }
  // Closed form D5(y, a) = y^5 - 5 a y^3 + 5 a^2 y against f, and the
  // recurrence against both.
  std::size_t dickson_bad = 0;
  for (std::int64_t y = 0; y < 2019; ++y) {
    const std::int64_t y2 = y * y % 2019, y3 = y2 * y % 2019, y5 = y3 * y2 % 2019;
    const std::int64_t closed = ((y5 - 5 * 22 * y3 + 5 * 22 * 22 % 2019 * y) % 2019 + 2019) % 2019;
    const std::int64_t target = (y5 + 1909 * y3 + 401 * y) % 2019;
    const auto v = Mod2019::from(static_cast<std::uint32_t>(y));
    const auto rec = dickson_eval(5, v, Mod2019::from(22));
    if (closed != target || rec.value() != static_cast<std::uint32_t>(target)) ++dickson_bad;
  }
  ok = ok && dickson_bad == 0;
  return pass_if(ok, detail + cat("dickson_mismatches=", dickson_bad));
}

// 8 -------------------------------------------------------------------------
inline Outcome factoring(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto inst = lattice::FactoringInstance::parse(bundle::asset("factoring2019"));
  const std::vector<std::string> sol = bundle::lines(bundle::asset("factoring2019_solution"));
  bool bundled_ok = false;
  try {
    const lattice::FactoringResult r = lattice::factor_with_hint(inst);
    bundled_ok = sol.size() == 2 && r.p == parse_decimal(sol[0]) && r.q == parse_decimal(sol[1]);
  } catch (const NoSolution&) {
  }
  const bool fast = seconds_since(t0) < 60.0;

  SplitMix64 rng = stream(o, 8);
  std::string synth;
  bool synth_ok = true;
  for (unsigned bits : {64u, 128u, 512u}) {
    int solved = 0;
    for (int i = 0; i < 50; ++i) {
      const lattice::SyntheticInstance s = lattice::make_synthetic_instance(rng(), bits);
      try {
        const lattice::FactoringResult r = lattice::factor_with_hint(s.instance);
        if (r.p * r.q == s.instance.n && ((r.p == s.p && r.q == s.q) || (r.p == s.q && r.q == s.p))) ++solved;
      } catch (const NoSolution&) {
      }
    }
    synth_ok = synth_ok && solved == 50;
    synth += cat(" synthetic", bits, "=", solved, "/50");
  }
  return pass_if(bundled_ok && fast && synth_ok,
                 cat("bundled_instance=", bundled_ok, " under_60s=", fast) + synth);
}

// 9 -------------------------------------------------------------------------
inline Outcome sbox_metrics(const Options&) {
  const auto s = boolfun::VectorialMap::parse(bundle::asset("aes_sbox"));
  const boolfun::SboxMetrics m = boolfun::sbox_metrics(s);
  return pass_if(m.deg == 7 && m.nl == 112 && m.du == 4 && m.ai == 2,
                 cat("deg=", m.deg, " nl=", m.nl, " du=", m.du, " ai=", m.ai));
}

// 10 ------------------------------------------------------------------------
inline bool multiplicity_one(const std::vector<std::uint32_t>& ms) {
  return std::set<std::uint32_t>(ms.begin(), ms.end()).size() == ms.size();
}

inline bool daa_characterization(const boolfun::VectorialMap& g) {
  const boolfun::InvolutionProfile p = boolfun::involution_profile(g);
  for (std::uint32_t a = 1; a < g.size(); ++a) {
    const bool member = p.lambda_set.contains(a) || p.b_set.contains(a);
    if (boolfun::difference_count(g, a, a) != (member ? 2u : 0u)) return false;
  }
  return true;
}

inline Outcome apn_involutions(const Options&) {
  const auto m2 = boolfun::enumerate_apn_involutions(2);
  const auto m3 = boolfun::enumerate_apn_involutions(3);
  std::size_t q1_bad = 0, q2_bad = 0, q3_bad = 0;
  for (const auto& g : m3) {
    const boolfun::InvolutionProfile p = boolfun::involution_profile(g);
    bool disjoint = true;
    for (std::uint32_t v : p.b_set) disjoint = disjoint && !p.lambda_set.contains(v);
    if (!multiplicity_one(p.lambda_multiset) || !multiplicity_one(p.b_multiset) || !disjoint) ++q1_bad;
    if (!daa_characterization(g)) ++q2_bad;
    if (!boolfun::fixed_point_bound_check(g)) ++q3_bad;
  }
  const bool inverse_ok = daa_characterization(boolfun::inverse_map(Gf2nField(5)));
  return pass_if(m2.empty() && m3.size() == 224 && q1_bad + q2_bad + q3_bad == 0 && inverse_ok,
                 cat("M2=", m2.size(), " M3=", m3.size(), " q1_failures=", q1_bad, " q2_failures=", q2_bad,
                     " q3_failures=", q3_bad, " gf32_inverse_q2=", inverse_ok));
}

// 11 ------------------------------------------------------------------------
inline Outcome conjecture(const Options& o) {
  std::vector<std::pair<unsigned, unsigned>> cases = {{3, 1}, {3, 2}, {4, 1}, {4, 3},
                                                      {5, 1}, {5, 2}, {6, 1}};
  if (o.long_mode) {
    cases.emplace_back(7, 1);
    cases.emplace_back(8, 1);
  }
  bool ok = true;
  std::string detail;
  for (auto [n, k] : cases) {
    const boolfun::ConjectureReport r = boolfun::conjecture_verify(n, k, o.workers);
    ok = ok && r.pass;
    detail += cat(detail.empty() ? "" : " ", "(", n, ",", k, ")=", r.pass ? "pass" : "fail");
  }
  return pass_if(ok, detail);
}

// 12 ------------------------------------------------------------------------
inline Outcome sharing_checks(const Options& o) {
  SplitMix64 rng = stream(o, 12);
  std::size_t construct_bad = 0;
  for (int i = 0; i < 100; ++i) {
    const auto f = sharing::random_permutation_of_degree(rng, 2);
    const sharing::SharedFunction F = sharing::construct_n3(f);
    if (!sharing::is_sharing(F, f) || !sharing::is_noncomplete(F)) ++construct_bad;
  }
  std::size_t equivalence_bad = 0, satisfied = 0;
  for (int i = 0; i < 500; ++i) {
    const auto f = sharing::random_function_of_degree(rng, 1 + static_cast<unsigned>(rng.below(4)));
    const bool cond = sharing::hypercube_condition(f, 3);
    satisfied += cond;
    if (cond != (boolfun::max_component_degree(f) <= 2)) ++equivalence_bad;
  }
  std::size_t transport_bad = 0;
  for (int i = 0; i < 100; ++i) {
    const auto f = sharing::random_permutation_of_degree(rng, 2);
    const auto a = sharing::random_affine(rng), b = sharing::random_affine(rng);
    const sharing::SharedFunction G = sharing::transport_affine(sharing::construct_n3(f), a, b);
    const auto g = boolfun::compose(b.as_map(), boolfun::compose(f, a.as_map()));
    if (!sharing::is_sharing(G, g) || !sharing::is_noncomplete(G)) ++transport_bad;
  }
  return pass_if(construct_bad + equivalence_bad + transport_bad == 0,
                 cat("construct_failures=", construct_bad, " equivalence_failures=", equivalence_bad,
                     " (", satisfied, "/500 satisfy) transport_failures=", transport_bad));
}

// 13 ------------------------------------------------------------------------
inline Outcome protocols_checks(const Options& o) {
  SplitMix64 rng = stream(o, 13);
  std::size_t sum_bad = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 2 + rng.below(9);
    const std::uint64_t price = 1 + rng.below(1'000'000);
    std::vector<std::uint64_t> inputs(n);
    std::uint64_t plain = 0;
    for (auto& x : inputs) {
      x = rng.below(price);
      plain += x;
    }
    const protocols::SecureSumResult r = protocols::secure_sum(inputs, price, rng());
    if (r.total != plain || r.affordable != (plain >= price)) ++sum_bad;
  }

  // Each step is checked with key_less and, independently, on the integer value.
  auto key = protocols::KeyState<1024>::from_string(std::string(1024, '0'));
  ArbitraryInt value = key.value();
  std::size_t steps = 0, flip_bad = 0;
  while (steps < 10'000) {
    if (!key.has_legal_move()) {
      key = protocols::KeyState<1024>::from_string(std::string(1024, '0'));
      value = 0;
    }
    const auto move = protocols::random_legal_move(key, rng);
    const auto next = protocols::keyflip_step(key, move->first, move->second);
    const ArbitraryInt next_value = next.value();
    if (!protocols::key_less(key, next) || !(value < next_value)) ++flip_bad;
    key = next;
    value = next_value;
    ++steps;
  }

  const protocols::RepunitShape shape = protocols::repunit_multiple(2019);
  ArbitraryInt rep = 0;
  std::uint64_t first_divisible = 0;
  for (std::uint64_t a = 1; a <= shape.ones && first_divisible == 0; ++a) {
    rep = rep * 10 + 1;
    if (rep % 2019 == 0) first_divisible = a;
  }
  const bool repunit_ok = first_divisible == shape.ones;
  return pass_if(sum_bad == 0 && flip_bad == 0 && repunit_ok,
                 cat("secure_sum_failures=", sum_bad, " keyflip_steps=", steps, " keyflip_failures=", flip_bad,
                     " repunit_a=", shape.ones, " minimal=", repunit_ok));
}

struct Entry {
  int id;
  const char* name;
  Outcome (*fn)(const Options&);
};

inline const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = {
      {1, "curl27_known_collision", known_collision},
      {2, "curl27_invariants", curl_invariants},
      {3, "curl27_live_attack", live_collision},
      {4, "twinpeaks_slide_attack", slide_attack},
      {5, "rotor_bruteforce", rotor},
      {6, "qam_tables_and_plaintext", qam},
      {7, "slp_tables", slp_tables},
      {8, "factoring", factoring},
      {9, "sbox_metrics", sbox_metrics},
      {10, "apn_involutions", apn_involutions},
      {11, "conjecture", conjecture},
      {12, "sharing", sharing_checks},
      {13, "protocols", protocols_checks},
  };
  return all;
}

inline std::string check_name(int id, const char* name) {
  return cat(id < 10 ? "c0" : "c", id, "_", name);
}

}  // namespace detail

/// Criteria 1 to 13. Failures and exceptions are reported, never thrown.
/// `on_result` sees each criterion as soon as it finishes.
inline Run run_all_acceptance(const Options& o,
                              const std::function<void(const CriterionResult&)>& on_result = {}) {
  Run run{Report("acceptance"), {}};
  run.report.add_input(detail::cat("seed=", o.seed, " long=", o.long_mode));
  run.report.metric("seed", o.seed);
  run.report.metric("workers", o.workers);
  run.report.metric("long", o.long_mode);
  for (const detail::Entry& e : detail::entries()) {
    CriterionResult r;
    r.id = e.id;
    r.name = detail::check_name(e.id, e.name);
    const auto t0 = std::chrono::steady_clock::now();
    try {
      detail::Outcome out = e.fn(o);
      r.status = out.status;
      r.detail = std::move(out.detail);
    } catch (const std::exception& ex) {
      r.status = Report::Status::fail;
      r.detail = std::string("error: ") + ex.what();
    }
    r.seconds = detail::seconds_since(t0);
    if (r.status == Report::Status::skip) {
      run.report.skip(r.name, r.detail);
    } else {
      run.report.check(r.name, r.status == Report::Status::pass, r.detail);
    }
    if (on_result) on_result(r);
    run.criteria.push_back(std::move(r));
  }
  return run;
}

/// Criterion 14: two default-mode runs with seed 42 and one worker must
/// serialize identically. When `first` already is such a run it is reused.
inline CriterionResult determinism_check(const Run* first = nullptr) {
  const Options reference{42, 1, false};
  const auto t0 = std::chrono::steady_clock::now();
  const bool reuse = first && first->report.serialize().find("metric.seed=42\nmetric.workers=1\nmetric.long=false\n") !=
                                  std::string::npos;
  const std::string a = reuse ? first->report.serialize() : run_all_acceptance(reference).report.serialize();
  const std::string b = run_all_acceptance(reference).report.serialize();
  CriterionResult r;
  r.id = 14;
  r.name = detail::check_name(14, "determinism");
  r.status = a == b ? Report::Status::pass : Report::Status::fail;
  r.detail = detail::cat("report_fnv=", hex64(fnv1a64(a)), a == b ? " identical" : " differs");
  r.seconds = detail::seconds_since(t0);
  return r;
}

}  // namespace cryptobench::acceptance
