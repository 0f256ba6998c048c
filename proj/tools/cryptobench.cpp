// Command-line frontend. Every command prints a Report to stdout; exit 0 on
// pass, 1 when a check fails, 2 on bad input or a failed search.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cryptobench/acceptance.hpp"
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

using namespace cryptobench;

namespace {

struct Globals {
  std::uint64_t seed = 42;
  unsigned workers = 1;
  bool long_mode = false;
};

// Input text plus its digest contribution.
std::string load(Report& r, const std::string& ref) {
  std::string text = bundle::resolve(ref);
  r.add_input(text);
  return text;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  const auto e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

// Comma-separated trits, or the compact 0^{k} notation used by the bundle.
curl27::TritString parse_message(const std::string& line) {
  try {
    return curl27::parse_trits(line);
  } catch (const InvalidInput&) {
    return curl27::parse_fragment_notation(line);
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

int emit(const Report& r) {
  std::fputs(r.serialize().c_str(), stdout);
  return r.passed() ? 0 : 1;
}

// ---------------------------------------------------------------------------

int curl_hash_cmd(const std::string& file) {
  Report r("curl27 hash");
  const auto ls = bundle::lines(load(r, file));
  r.metric("messages", ls.size());
  for (std::size_t i = 0; i < ls.size(); ++i) {
    r.metric("digest." + std::to_string(i), curl27::format_trits(curl27::curl_hash(parse_message(ls[i]))));
  }
  r.check("nonempty", !ls.empty());
  return emit(r);
}

int curl_verify_cmd(const std::string& file) {
  Report r("curl27 verify");
  const auto ls = bundle::lines(load(r, file));
  if (ls.size() != 2) throw InvalidInput("expected exactly two messages");
  const auto x = parse_message(ls[0]), x2 = parse_message(ls[1]);
  r.metric("length", x.size());
  r.metric("digest", curl27::format_trits(curl27::curl_hash(x)));
  r.check("collision", curl27::verify_collision(x, x2));
  return emit(r);
}

int curl_attack_cmd(const Globals& g, std::size_t m, std::uint64_t budget, const std::string& out) {
  Report r("curl27 attack");
  r.add_input("m=" + std::to_string(m) + " budget=" + std::to_string(budget) + " seed=" + std::to_string(g.seed));
  curl27::CollisionSearchOptions opts;
  opts.fragment = m;
  opts.budget = budget;
  opts.seed = g.seed;
  opts.workers = g.workers;
  const auto res = curl27::fragmentation_collision_attack(opts);
  r.metric("hashes", res.hashes);
  r.metric("first_index", res.first_index);
  r.metric("second_index", res.second_index);
  r.metric("digest", curl27::format_trits(res.digest));
  r.check("verified", curl27::verify_collision(res.first, res.second));
  if (!out.empty()) {
    write_file(out, curl27::format_trits(res.first) + "\n" + curl27::format_trits(res.second) + "\n");
  }
  return emit(r);
}

// ---------------------------------------------------------------------------

// Request lines "E <hex>" or "I <hex>"; one hex answer line each.
int twinpeaks_oracle_cmd(const Globals& g, const std::string& listen) {
  auto oracle = twinpeaks::LocalOracle::from_seed(g.seed);
  std::ifstream file;
  if (listen != "-") {
    file.open(listen);
    if (!file) throw InvalidInput("cannot open '" + listen + "'");
  }
  std::istream& in = listen == "-" ? std::cin : file;
  Report r("twinpeaks oracle");
  r.add_input("seed=" + std::to_string(g.seed));
  std::string line;
  std::uint64_t bad = 0;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    try {
      if (line.size() < 3 || line[1] != ' ') throw InvalidInput("expected 'E <hex>' or 'I <hex>'");
      const auto blocks = twinpeaks::parse_blocks_hex(trim(line.substr(2)));
      if (line[0] == 'E') {
        std::cout << twinpeaks::to_hex(oracle.encrypt(blocks)) << '\n';
      } else if (line[0] == 'I') {
        std::cout << twinpeaks::to_hex(oracle.incomplete_decrypt(blocks)) << '\n';
      } else {
        throw InvalidInput("unknown request '" + line.substr(0, 1) + "'");
      }
    } catch (const InvalidInput& e) {
      ++bad;
      std::cout << "error " << e.what() << '\n';
    }
    std::cout.flush();
  }
  r.metric("encrypt_blocks", oracle.encrypt_calls());
  r.metric("incomplete_decrypt_blocks", oracle.incomplete_decrypt_calls());
  r.check("requests_well_formed", bad == 0, "bad=" + std::to_string(bad));
  return emit(r);
}

// The oracle is keyed by --seed; the attack only talks to it through queries.
int twinpeaks_attack_cmd(const Globals& g, const std::string& ciphertext) {
  Report r("twinpeaks attack");
  std::string hex = ciphertext;
  if (hex.starts_with(bundle::kPrefix)) hex = bundle::lines(bundle::resolve(hex)).at(0);
  r.add_input(hex);
  r.add_input("seed=" + std::to_string(g.seed));
  auto oracle = twinpeaks::LocalOracle::from_seed(g.seed);
  const auto blocks = twinpeaks::parse_blocks_hex(trim(hex));
  std::vector<twinpeaks::Block128> plain;
  twinpeaks::RecoveryStats stats;
  SplitMix64 rng = SplitMix64::at(g.seed, 1);
  for (const auto& y : blocks) plain.push_back(twinpeaks::slide_attack_decrypt(oracle, y, rng(), {}, &stats));
  const auto again = oracle.encrypt(plain);
  r.metric("blocks", blocks.size());
  r.metric("plaintext", twinpeaks::to_hex(plain));
  r.metric("recovered_values", stats.values);
  r.metric("oracle_blocks", stats.queries);
  r.check("reencrypts", again == blocks);
  return emit(r);
}

// ---------------------------------------------------------------------------

int rotor_cmd(const std::string& file) {
  Report r("rotor brute");
  const std::string ct = trim(load(r, file));
  for (const auto& c : classical::rotor_bruteforce(ct)) {
    r.metric("candidate." + std::string(classical::key_name(c.key)), c.plaintext);
  }
  const auto plausible = classical::plausible_rotor_candidates(ct);
  for (const auto& c : plausible) r.metric("plausible." + std::string(classical::key_name(c.key)), c.plaintext);
  r.check("unique_plausible", plausible.size() == 1, "count=" + std::to_string(plausible.size()));
  return emit(r);
}

struct QamPart {
  classical::CorrectedStream stream;
  std::string table;
  std::string key;
};

QamPart qam_part(Report& r, int part) {
  if (part != 1 && part != 2) throw InvalidInput("--part must be 1 or 2");
  const std::string n = std::to_string(part);
  return {classical::correct_stream(classical::printed_hex_to_bits(load(r, "bundled:qam_part" + n))),
          part == 1 ? "qam_table4a" : "qam_table4b", "qam_key" + n};
}

int qam_decode_cmd(int part) {
  Report r("qam decode");
  const QamPart p = qam_part(r, part);
  const auto key = classical::SubstitutionKey::parse(load(r, "bundled:" + p.key));
  r.metric("codewords", p.stream.codewords.size());
  r.metric("corrections", p.stream.corrections);
  r.metric("symbols", classical::apply_substitution(p.stream.codewords, key));
  r.check("decoded", !p.stream.codewords.empty());
  return emit(r);
}

int qam_freq_cmd(int part) {
  Report r("qam freq");
  const QamPart p = qam_part(r, part);
  const auto freq = classical::codeword_frequencies(p.stream.codewords);
  std::size_t mismatched = 0;
  for (const std::string& line : bundle::lines(load(r, "bundled:" + p.table))) {
    std::istringstream in(line);
    std::string gray, word;
    std::size_t printed = 0;
    in >> gray >> word >> printed;
    const auto it = freq.find(word);
    const std::size_t got = it == freq.end() ? 0 : it->second;
    r.metric("count." + gray + "." + word, got);
    mismatched += got != printed;
  }
  r.check("matches_printed_table", mismatched == 0, "mismatched=" + std::to_string(mismatched));
  return emit(r);
}

// ---------------------------------------------------------------------------

int slp_validate_cmd(const std::string& file, const std::string& policy) {
  Report r("slp validate");
  const auto prog = slp::parse_program(load(r, file));
  r.add_input(policy);
  const auto v = slp::validate(prog, slp::parse_policy(policy));
  r.metric("commands", prog.commands.size());
  for (const auto& viol : v.violations) r.metric("violation." + std::to_string(viol.command), viol.message);
  r.check("valid", v.ok());
  return emit(r);
}

int slp_verify_cmd(const std::string& file, const std::string& target, const std::string& policy) {
  Report r("slp verify");
  const auto prog = slp::parse_program(load(r, file));
  r.add_input(target);
  r.add_input(policy);
  const auto e = slp::verify_equivalence(prog, slp::parse_polynomial(target), slp::parse_policy(policy));
  r.metric("commands", prog.commands.size());
  if (e.counterexample) r.metric("counterexample", *e.counterexample);
  r.check("equivalent", e.equal);
  return emit(r);
}

int factor_cmd(const std::string& file) {
  Report r("factor");
  const auto inst = lattice::FactoringInstance::parse(load(r, file));
  const auto res = lattice::factor_with_hint(inst);
  r.metric("p", to_decimal(res.p));
  r.metric("q", to_decimal(res.q));
  r.metric("a1", to_decimal(res.a1));
  r.metric("a2", to_decimal(res.a2));
  r.metric("z", res.z);
  r.check("product", res.p * res.q == inst.n);
  r.check("hint", lattice::hint_for(res.p, res.q) == inst.h);
  return emit(r);
}

// ---------------------------------------------------------------------------

int boolfun_metrics_cmd(const std::string& file) {
  Report r("boolfun metrics");
  const auto s = boolfun::VectorialMap::parse(load(r, file));
  const auto m = boolfun::sbox_metrics(s);
  r.metric("n", s.n);
  r.metric("deg", m.deg);
  r.metric("nl", m.nl);
  r.metric("du", m.du);
  r.metric("ai", m.ai);
  r.metric("permutation", boolfun::is_permutation(s));
  r.check("computed", true);
  return emit(r);
}

int boolfun_apn_cmd(unsigned n) {
  Report r("boolfun apn-involutions");
  r.add_input("n=" + std::to_string(n));
  const auto all = boolfun::enumerate_apn_involutions(n);
  std::size_t bound_failures = 0;
  for (const auto& g : all) bound_failures += !boolfun::fixed_point_bound_check(g);
  r.metric("count", all.size());
  r.check("fixed_point_bound", bound_failures == 0, "failures=" + std::to_string(bound_failures));
  return emit(r);
}

int boolfun_conjecture_cmd(const Globals& g, unsigned n, unsigned k) {
  Report r("boolfun conjecture");
  r.add_input("n=" + std::to_string(n) + " k=" + std::to_string(k));
  const auto rep = boolfun::conjecture_verify(n, k, g.workers);
  r.metric("delta_size", rep.delta_size);
  r.metric("expected", rep.expected);
  r.metric("pairs", rep.pairs);
  for (const auto& [count, pairs] : rep.count_histogram) r.metric("histogram." + std::to_string(count), pairs);
  r.check("all_pairs_expected", rep.pass);
  return emit(r);
}

// ---------------------------------------------------------------------------

int sharing_check_cmd(const std::string& file, unsigned n) {
  Report r("sharing check");
  const auto f = boolfun::VectorialMap::parse(load(r, file));
  r.add_input("n=" + std::to_string(n));
  const bool cube = sharing::hypercube_condition(f, n);
  r.metric("max_degree", boolfun::max_component_degree(f));
  r.check("hypercube_condition", cube);
  if (n == 3 && cube) {
    const auto F = sharing::construct_n3(f);
    r.check("construction_shares_f", sharing::is_sharing(F, f));
    r.check("construction_noncomplete", sharing::is_noncomplete(F));
    r.metric("construction_invertible", sharing::is_invertible(F));
  }
  return emit(r);
}

int sharing_construct_cmd(const std::string& file, const std::string& out) {
  Report r("sharing construct");
  const auto f = boolfun::VectorialMap::parse(load(r, file));
  const auto F = sharing::construct_n3(f);
  r.metric("tables_fnv", hex64(fnv1a64(F.format())));
  r.metric("invertible", sharing::is_invertible(F));
  r.check("shares_f", sharing::is_sharing(F, f));
  r.check("noncomplete", sharing::is_noncomplete(F));
  if (!out.empty()) write_file(out, F.format());
  return emit(r);
}

int sharing_transport_cmd(const std::string& ffile, const std::string& afile, const std::string& bfile,
                          const std::string& out) {
  Report r("sharing transport");
  const auto F = sharing::SharedFunction::parse(load(r, ffile));
  const auto a = sharing::AffinePermutation::parse(load(r, afile));
  const auto b = sharing::AffinePermutation::parse(load(r, bfile));
  // f(x) is what F sums to on the tuple (x, 0, ..., 0).
  std::vector<std::uint32_t> ft(sharing::kValues);
  std::vector<std::uint32_t> x(F.shares, 0);
  for (std::uint32_t v = 0; v < sharing::kValues; ++v) {
    x[0] = v;
    for (unsigned i = 0; i < F.shares; ++i) ft[v] ^= F.eval(i, x);
  }
  const boolfun::VectorialMap f(sharing::kWidth, ft);
  const auto G = sharing::transport_affine(F, a, b);
  const auto g = boolfun::compose(b.as_map(), boolfun::compose(f, a.as_map()));
  r.metric("tables_fnv", hex64(fnv1a64(G.format())));
  r.check("input_is_sharing", sharing::is_sharing(F, f));
  r.check("shares_b_f_a", sharing::is_sharing(G, g));
  r.check("noncomplete_preserved", sharing::is_noncomplete(G) == sharing::is_noncomplete(F));
  if (!out.empty()) write_file(out, G.format());
  return emit(r);
}

// ---------------------------------------------------------------------------

int protocol_sum_cmd(const Globals& g, const std::vector<std::uint64_t>& inputs, std::uint64_t price) {
  Report r("protocol sum");
  std::string in;
  for (auto v : inputs) in += std::to_string(v) + ",";
  r.add_input(in + " price=" + std::to_string(price) + " seed=" + std::to_string(g.seed));
  const auto res = protocols::secure_sum(inputs, price, g.seed);
  std::uint64_t direct = 0;
  for (auto v : inputs) direct += v;
  r.metric("modulus", res.session.modulus);
  for (std::size_t j = 0; j < res.session.published.size(); ++j) {
    r.metric("published." + std::to_string(j), res.session.published[j]);
  }
  r.metric("total", res.total);
  r.metric("affordable", res.affordable);
  r.check("total_matches_inputs", res.total == direct % res.session.modulus);
  return emit(r);
}

int keyflip_cmd(const Globals& g) {
  Report r("puzzle keyflip");
  r.add_input("seed=" + std::to_string(g.seed));
  using K = protocols::KeyState<16>;
  const K k = K::from_string("11001 01101110 011");
  const K k2 = protocols::keyflip_step(k, 5, 12);
  r.metric("example_before", k.to_string());
  r.metric("example_after", k2.to_string());
  r.check("example_increases", protocols::key_less(k, k2));
  SplitMix64 rng = SplitMix64::at(g.seed, 2);
  K cur;
  std::uint64_t steps = 0, decreases = 0;
  while (auto mv = protocols::random_legal_move(cur, rng)) {
    const K next = protocols::keyflip_step(cur, mv->first, mv->second);
    decreases += !protocols::key_less(cur, next);
    cur = next;
    ++steps;
  }
  r.metric("random_play_steps", steps);
  r.check("random_play_monotone", decreases == 0);
  r.check("random_play_ends_all_ones", cur == K::all_ones());
  return emit(r);
}

int repunit_cmd(std::uint64_t modulus, std::uint64_t zeros) {
  Report r("puzzle repunit");
  r.add_input("modulus=" + std::to_string(modulus) + " zeros=" + std::to_string(zeros));
  const auto s = protocols::repunit_multiple(modulus, zeros);
  r.metric("ones", s.ones);
  r.metric("zeros", s.zeros);
  r.check("divisible", parse_decimal(s.digits()) % modulus == 0);
  return emit(r);
}

int acceptance_cmd(const Globals& g, bool determinism) {
  acceptance::Options o{g.seed, g.workers, g.long_mode};
  const acceptance::Run run = acceptance::run_all_acceptance(o);
  Report r = run.report;
  if (determinism) {
    const auto d = acceptance::determinism_check(&run);
    r.check(d.name, d.status == Report::Status::pass, d.detail);
  }
  return emit(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cryptobench: challenge solvers and attack reproductions"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Globals g;
  app.add_option("--seed", g.seed, "seed for every randomized step")->capture_default_str();
  app.add_option("--workers", g.workers, "worker threads (1 is fully deterministic)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--long", g.long_mode, "include long-running acceptance criteria");

  std::function<int()> action;
  auto on = [&](CLI::App* sub, std::function<int()> fn) { sub->callback([&action, fn] { action = fn; }); };

  // curl27
  auto* curl = app.add_subcommand("curl27", "Curl-P-27 hash and collision attack")->require_subcommand(1);
  std::string curl_file, curl_out;
  std::size_t curl_m = 9;
  std::uint64_t curl_budget = 8'000'000;
  auto* ch = curl->add_subcommand("hash", "hash each message line");
  ch->add_option("file", curl_file)->required();
  on(ch, [&] { return curl_hash_cmd(curl_file); });
  auto* cv = curl->add_subcommand("verify", "check that two messages collide");
  cv->add_option("file", curl_file)->required();
  on(cv, [&] { return curl_verify_cmd(curl_file); });
  auto* ca = curl->add_subcommand("attack", "fragmentation collision search");
  ca->add_option("--m", curl_m, "fragment size")->capture_default_str();
  ca->add_option("--budget", curl_budget, "maximum candidate hashes")->capture_default_str();
  ca->add_option("--out", curl_out, "write the colliding pair here");
  on(ca, [&] { return curl_attack_cmd(g, curl_m, curl_budget, curl_out); });

  // twinpeaks
  auto* tp = app.add_subcommand("twinpeaks", "TwinPeaks slide attack")->require_subcommand(1);
  std::string tp_listen, tp_ct;
  auto* to = tp->add_subcommand("oracle", "answer E/I requests from a file or pipe ('-' is stdin)");
  to->add_option("--listen-file", tp_listen)->required();
  on(to, [&] { return twinpeaks_oracle_cmd(g, tp_listen); });
  auto* ta = tp->add_subcommand("attack", "decrypt against the local oracle keyed by --seed");
  ta->add_option("--ciphertext", tp_ct, "hex blocks or bundled:<name>")->required();
  on(ta, [&] { return twinpeaks_attack_cmd(g, tp_ct); });

  // classical
  std::string rotor_file;
  int qam_part_no = 1;
  auto* rotor = app.add_subcommand("rotor", "six-key rotor machine")->require_subcommand(1);
  auto* rb = rotor->add_subcommand("brute", "try every key");
  rb->add_option("file", rotor_file)->required();
  on(rb, [&] { return rotor_cmd(rotor_file); });
  auto* qam = app.add_subcommand("qam", "16QAM / Hamming(7,4) challenge")->require_subcommand(1);
  auto* qd = qam->add_subcommand("decode", "error-correct and substitute one part");
  qd->add_option("--part", qam_part_no)->required();
  on(qd, [&] { return qam_decode_cmd(qam_part_no); });
  auto* qf = qam->add_subcommand("freq", "codeword frequencies against the printed table");
  qf->add_option("--part", qam_part_no)->required();
  on(qf, [&] { return qam_freq_cmd(qam_part_no); });

  // slp
  std::string slp_file, slp_policy = "calc", slp_target = "f2019";
  auto* slp = app.add_subcommand("slp", "straight-line programs mod 2019")->require_subcommand(1);
  auto* sv = slp->add_subcommand("validate", "check the calculator rules");
  sv->add_option("file", slp_file)->required();
  sv->add_option("--policy", slp_policy, "broken|calc|permissive")->capture_default_str();
  on(sv, [&] { return slp_validate_cmd(slp_file, slp_policy); });
  auto* sq = slp->add_subcommand("verify", "compare with a polynomial on all residues");
  sq->add_option("file", slp_file)->required();
  sq->add_option("--target", slp_target, "descending coefficients or f2019")->capture_default_str();
  sq->add_option("--policy", slp_policy)->capture_default_str();
  on(sq, [&] { return slp_verify_cmd(slp_file, slp_target, slp_policy); });

  // factor
  std::string factor_file;
  auto* fa = app.add_subcommand("factor", "factor n from the quadratic hint");
  fa->add_option("--instance", factor_file)->required();
  on(fa, [&] { return factor_cmd(factor_file); });

  // boolfun
  std::string bf_file;
  unsigned bf_n = 3, bf_k = 1;
  auto* bf = app.add_subcommand("boolfun", "vectorial Boolean functions")->require_subcommand(1);
  auto* bm = bf->add_subcommand("metrics", "deg, nl, du, ai");
  bm->add_option("file", bf_file)->required();
  on(bm, [&] { return boolfun_metrics_cmd(bf_file); });
  auto* ba = bf->add_subcommand("apn-involutions", "enumerate APN involutions");
  ba->add_option("--n", bf_n)->capture_default_str();
  on(ba, [&] { return boolfun_apn_cmd(bf_n); });
  auto* bc = bf->add_subcommand("conjecture", "count solutions in Delta^3");
  bc->add_option("--n", bf_n)->required();
  bc->add_option("--k", bf_k)->capture_default_str();
  on(bc, [&] { return boolfun_conjecture_cmd(g, bf_n, bf_k); });

  // sharing
  std::string sh_f, sh_a, sh_b, sh_out;
  unsigned sh_n = 3;
  auto* sh = app.add_subcommand("sharing", "threshold sharings on F_2^4")->require_subcommand(1);
  auto* sc = sh->add_subcommand("check", "hypercube condition, and the construction for n = 3");
  sc->add_option("file", sh_f)->required();
  sc->add_option("--n", sh_n)->capture_default_str();
  on(sc, [&] { return sharing_check_cmd(sh_f, sh_n); });
  auto* sk = sh->add_subcommand("construct", "n = 3 sharing of a quadratic map");
  sk->add_option("file", sh_f)->required();
  sk->add_option("--out", sh_out, "write the component tables here");
  on(sk, [&] { return sharing_construct_cmd(sh_f, sh_out); });
  auto* st = sh->add_subcommand("transport", "sharing of b o f o a");
  st->add_option("F", sh_f)->required();
  st->add_option("a", sh_a)->required();
  st->add_option("b", sh_b)->required();
  st->add_option("--out", sh_out, "write the component tables here");
  on(st, [&] { return sharing_transport_cmd(sh_f, sh_a, sh_b, sh_out); });

  // protocols
  std::vector<std::uint64_t> pr_inputs;
  std::uint64_t pr_price = 0, pz_modulus = 2019, pz_zeros = 0;
  auto* pr = app.add_subcommand("protocol", "secure sum")->require_subcommand(1);
  auto* ps = pr->add_subcommand("sum", "additive-share secure sum");
  ps->add_option("--inputs", pr_inputs)->required()->delimiter(',');
  ps->add_option("--price", pr_price)->required();
  on(ps, [&] { return protocol_sum_cmd(g, pr_inputs, pr_price); });
  auto* pz = app.add_subcommand("puzzle", "key flipping and repunits")->require_subcommand(1);
  auto* pk = pz->add_subcommand("keyflip", "worked example and a random play");
  pk->add_flag("--demo")->required();
  on(pk, [&] { return keyflip_cmd(g); });
  auto* pu = pz->add_subcommand("repunit", "smallest 1..10..0 multiple");
  pu->add_option("--modulus", pz_modulus)->capture_default_str();
  pu->add_option("--zeros", pz_zeros)->capture_default_str();
  on(pu, [&] { return repunit_cmd(pz_modulus, pz_zeros); });

  // acceptance
  bool acc_determinism = false;
  auto* ac = app.add_subcommand("acceptance", "run the acceptance suite");
  ac->add_flag("--determinism", acc_determinism, "also rerun with seed 42, one worker, and compare");
  on(ac, [&] { return acceptance_cmd(g, acc_determinism); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    return action ? action() : 2;
  } catch (const InvalidInput& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
  } catch (const BudgetExhausted& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
  } catch (const NoSolution& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
  }
  return 2;
}
