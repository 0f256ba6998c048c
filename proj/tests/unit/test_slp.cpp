#include <catch_amalgamated.hpp>

#include "cryptobench/bundle.hpp"
#include "cryptobench/slp.hpp"

using namespace cryptobench;
using namespace cryptobench::slp;

namespace {

SlpProgram program(const char* asset) { return parse_program(bundle::asset(asset)); }

// f(y) = y^5 + 1909 y^3 + 401 y by repeated multiplication, no Horner.
std::uint32_t f_direct(std::int64_t y) {
  std::int64_t p = 1, acc = 0;
  for (int e = 1; e <= 5; ++e) {
    p = p * y % 2019;
    if (e == 1) acc += 401 * p;
    if (e == 3) acc += 1909 * p;
    if (e == 5) acc += p;
  }
  return static_cast<std::uint32_t>(acc % 2019);
}

}  // namespace

TEST_CASE("bundled programs validate under their policies", "[slp]") {
  CHECK(program("table6").commands.size() == 9);
  CHECK(program("table7").commands.size() == 14);
  CHECK(program("table8").commands.size() == 11);
  CHECK(validate(program("table6"), DigitPolicy::broken).ok());
  CHECK(validate(program("table7"), DigitPolicy::calc).ok());
  CHECK(validate(program("table8"), DigitPolicy::calc).ok());
  CHECK_FALSE(validate(program("table6"), DigitPolicy::calc).ok());
  CHECK_FALSE(validate(program("table8"), DigitPolicy::broken).ok());
}

TEST_CASE("bundled programs compute f on every residue", "[slp]") {
  const Polynomial f = parse_polynomial("1,0,1909,0,401,0");
  CHECK(f == parse_polynomial("f2019"));
  for (auto [name, policy] : {std::pair{"table6", DigitPolicy::broken}, std::pair{"table7", DigitPolicy::calc},
                              std::pair{"table8", DigitPolicy::calc}}) {
    const SlpProgram p = program(name);
    CHECK(verify_equivalence(p, f, policy).equal);
    for (std::uint32_t y = 0; y < 2019; ++y) {
      REQUIRE(run(p, Value::from(y), policy).value() == f_direct(y));
    }
  }
}

TEST_CASE("the table as printed is off by one register", "[slp]") {
  const Equivalence e = verify_equivalence(program("table7_printed"), parse_polynomial("f2019"), DigitPolicy::calc);
  CHECK_FALSE(e.equal);
  REQUIRE(e.counterexample.has_value());
  CHECK(run(program("table7_printed"), Value::from(*e.counterexample), DigitPolicy::calc).value() !=
        f_direct(*e.counterexample));
}

TEST_CASE("horner agrees with direct evaluation", "[slp]") {
  const Polynomial f = parse_polynomial("f2019");
  for (std::uint32_t y = 0; y < 2019; ++y) REQUIRE(horner(f, Value::from(y)).value() == f_direct(y));
  CHECK(horner(parse_polynomial("7"), Value::from(5)).value() == 7);
}

TEST_CASE("example programs and constant reduction", "[slp]") {
  CHECK(run(program("slp_example_calc"), Value::from(3), DigitPolicy::calc).value() == 5);
  CHECK(verify_equivalence(program("slp_example_calc"), parse_polynomial("1,0,-4"), DigitPolicy::calc).equal);
  CHECK(run(parse_program("S1 = y\nS2 = 2222"), Value::from(0), DigitPolicy::calc).value() == 203);
  const SlpProgram p2500 = parse_program("S1 = y\nS2 = 2500");
  CHECK_THROWS_AS(run(p2500, Value::from(0), DigitPolicy::broken), InvalidInput);
  CHECK(run(p2500, Value::from(0), DigitPolicy::permissive).value() == 481);
}

TEST_CASE("validation catches bad programs", "[slp]") {
  CHECK_FALSE(validate(parse_program("S1 = y\nS2 = 3"), DigitPolicy::broken).ok());
  CHECK_FALSE(validate(parse_program("S1 = y\nS2 = 22\nS3 = S1 * S2\nS4 = S1 - S1\nS5 = S5 - S1"),
                       DigitPolicy::calc)
                  .ok());
  CHECK_FALSE(validate(parse_program("S1 = 2"), DigitPolicy::calc).ok());
  CHECK_FALSE(validate(parse_program("S1 = y\nS3 = S1 * S1"), DigitPolicy::calc).ok());
  CHECK(validate(parse_program("S1 = y\nS2 = 1515"), DigitPolicy::broken).ok());
  CHECK_FALSE(validate(parse_program("S1 = y\nS2 = 15151"), DigitPolicy::broken).ok());
  CHECK_FALSE(validate(parse_program(""), DigitPolicy::calc).ok());
}

TEST_CASE("parsing and formatting", "[slp]") {
  const SlpProgram p = parse_program("# comment\n S_1=y \nS_{2} = S1*S1\nS3 =   S2 -S1\n");
  REQUIRE(p.commands.size() == 3);
  CHECK(p.commands[1].op == Op::multiply);
  CHECK(p.commands[2].op == Op::subtract);
  CHECK(format_command(p.commands[2]) == "S3 = S2 - S1");
  for (const SlpCommand& c : program("table8").commands) CHECK(parse_command(format_command(c)).target == c.target);
  CHECK_THROWS_AS(parse_command("S1 = S2 + S3"), InvalidInput);
  CHECK_THROWS_AS(parse_policy("loose"), InvalidInput);
}
