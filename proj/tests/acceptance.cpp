// Runs the acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>

#include "cli.hpp"
#include "support.hpp"
#include "wreath/automata/operations.hpp"
#include "wreath/groups/list_notation.hpp"
#include "wreath/io/formats.hpp"
#include "wreath/minsky/encoding.hpp"
#include "wreath/patterns/patterns.hpp"
#include "wreath/wqo/wqo.hpp"

using namespace wreath;
using namespace wreath::test;

namespace {

constexpr double kLamplighterSeconds = 5.0;
constexpr double kNegativesSeconds = 30.0;
constexpr double kBenoisSeconds = 60.0;
constexpr double kMinskySeconds = 10.0;

constexpr int kNegativeInstances = 20;
constexpr int kBenoisInstances = 200;
constexpr int kOneSidedInstances = 200;
constexpr std::size_t kOneSidedLength = 12;
constexpr int kWqoPairs = 1000;
constexpr int kUpwardSamples = 200;
constexpr int kConservationElements = 200;
constexpr int kHomomorphismPairs = 100;
constexpr int kReflectingElements = 200;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string automaton_path(const std::string& name) { return fixture("automata/" + name); }

int run_cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  if (out)
    *out = o.str();
  return code;
}

decision::NormalizedAutomaton load(const std::string& name) {
  return decision::normalize(io::load_automaton(automaton_path(name)).automaton);
}

/// Product of a random Z2 automaton with the parity of its lamp toggles,
/// final only at odd parity. Every accepted element lights an odd number of
/// toggles, so none is the identity. Returns nothing when no odd final state
/// is reachable in the underlying graph.
std::optional<decision::RawAutomaton> odd_parity_instance(std::mt19937& rng) {
  const auto base = random_raw_automaton(rng, z2(), 1, 3, 5, 1);
  const auto n = static_cast<decision::StateId>(base.state_names.size());
  decision::RawAutomaton out;
  out.group = base.group;
  out.rank = base.rank;
  for (decision::StateId q = 0; q < n; ++q)
    for (int b : {0, 1})
      out.state_names.push_back(base.state_names[q] + "." + std::to_string(b));
  auto id = [](decision::StateId q, int b) { return 2 * q + static_cast<decision::StateId>(b); };
  out.initial = id(base.initial, 0);
  for (auto f : base.finals)
    out.finals.push_back(id(f, 1));
  for (const auto& e : base.edges) {
    int toggles = 0;
    for (const auto& t : e.label)
      if (const auto* lamp = std::get_if<LampToken>(&t))
        toggles += lamp->value == 1;
    for (int b : {0, 1})
      out.edges.push_back({id(e.from, b), e.label, id(e.to, b ^ (toggles % 2))});
  }
  std::set<decision::StateId> seen{out.initial};
  std::vector<decision::StateId> stack{out.initial};
  while (!stack.empty()) {
    const auto q = stack.back();
    stack.pop_back();
    for (const auto& e : out.edges)
      if (e.from == q && seen.insert(e.to).second)
        stack.push_back(e.to);
  }
  if (std::none_of(out.finals.begin(), out.finals.end(), [&](auto f) { return seen.contains(f); }))
    return std::nullopt;
  return out;
}

std::vector<decision::RawAutomaton> odd_parity_instances(int count) {
  std::mt19937 rng(2024);
  std::vector<decision::RawAutomaton> out;
  while (static_cast<int>(out.size()) < count)
    if (auto a = odd_parity_instance(rng))
      out.push_back(std::move(*a));
  return out;
}

Outcome lamplighter_positive() {
  const auto start = Clock::now();
  std::string text;
  const int code = run_cli({"decide", automaton_path("lamplighter_plus.rat")}, &text);
  const auto path = decision::path_oracle(load("lamplighter_plus.rat"), 8);
  const double t = seconds_since(start);
  Outcome o;
  o.pass = code == cli::kYes && path.found && path.path.size() == 8 && t < kLamplighterSeconds;
  o.detail = "decide exit " + std::to_string(code) + ", oracle witness length " +
             (path.found ? std::to_string(path.path.size()) : "none") + ", " +
             std::to_string(t) + " s (limit " + std::to_string(kLamplighterSeconds) + " s)";
  return o;
}

Outcome sound_negatives() {
  const auto start = Clock::now();
  int rejected = 0;
  for (const auto& raw : odd_parity_instances(kNegativeInstances))
    rejected += decision::decide_identity(decision::normalize(raw)).answer == decision::Answer::No;
  const double t = seconds_since(start);
  Outcome o;
  o.pass = rejected == kNegativeInstances && t < kNegativesSeconds;
  o.detail = std::to_string(rejected) + "/" + std::to_string(kNegativeInstances) +
             " non-member, " + std::to_string(t) + " s (limit " + std::to_string(kNegativesSeconds) + " s)";
  return o;
}

Outcome benois_cross_validation() {
  const auto start = Clock::now();
  std::mt19937 rng(7);
  const auto trivial = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(1));
  int mismatches = 0;
  int members = 0;
  for (int i = 0; i < kBenoisInstances; ++i) {
    const auto a = decision::normalize(random_raw_automaton(rng, trivial, 1 + i % 2, 4, 6, 2));
    const auto v = decision::decide_identity(a);
    const bool classical = decision::benois_oracle(a);
    mismatches += (v.answer == decision::Answer::Yes) != classical;
    members += classical;
  }
  const double t = seconds_since(start);
  Outcome o;
  o.pass = mismatches == 0 && t < kBenoisSeconds;
  o.detail = std::to_string(mismatches) + " mismatches on " + std::to_string(kBenoisInstances) +
             " instances (" + std::to_string(members) + " members), " + std::to_string(t) +
             " s (limit " + std::to_string(kBenoisSeconds) + " s)";
  return o;
}

Outcome oracle_one_sidedness() {
  std::mt19937 rng(11);
  int violations = 0;
  int confirmed = 0;
  int exhausted = 0;
  for (int i = 0; i < kOneSidedInstances; ++i) {
    const auto a = decision::normalize(random_raw_automaton(rng, z2(), 1, 3, 6, 1));
    const auto v = decision::decide_identity(a);
    exhausted += v.answer == decision::Answer::ResourceExhausted;
    if (decision::path_oracle(a, kOneSidedLength).found) {
      ++confirmed;
      violations += v.answer != decision::Answer::Yes;
    }
  }
  Outcome o;
  o.pass = violations == 0;
  o.detail = std::to_string(violations) + " violations, " + std::to_string(confirmed) +
             " oracle positives, " + std::to_string(exhausted) + " exhausted";
  return o;
}

Outcome wqo_exactness() {
  const auto kernel = wqo::kernel_automaton(z2(), 2);
  int wrong = 0;
  for (std::size_t len = 0; len <= 8; ++len)
    for (const auto& w : words_of_length(2, len)) {
      const auto xs = static_cast<std::size_t>(std::count(w.begin(), w.end(), 0u));
      wrong += automata::membership(*kernel, w) != (xs % 2 == 0 && (len - xs) % 2 == 0);
    }
  std::mt19937 rng(13);
  auto space = std::make_shared<wqo::EvalClassSpace>(z2(), 2);
  auto random_word = [&](std::size_t max_len) {
    Word w(std::uniform_int_distribution<std::size_t>(0, max_len)(rng));
    for (auto& s : w)
      s = std::uniform_int_distribution<Symbol>(0, 1)(rng);
    return w;
  };
  int mismatches = 0;
  int below = 0;
  for (int i = 0; i < kWqoPairs; ++i) {
    const Word u = random_word(3);
    const Word v = random_word(8);
    const bool leq = wqo::wqo_leq(u, v, *space);
    below += leq;
    mismatches += leq != automata::membership(wqo::upward_closure(u, space), v);
  }
  Outcome o;
  o.pass = wrong == 0 && mismatches == 0;
  o.detail = std::to_string(wrong) + " kernel errors over all words up to length 8, " +
             std::to_string(mismatches) + " order mismatches on " + std::to_string(kWqoPairs) +
             " pairs (" + std::to_string(below) + " comparable)";
  return o;
}

Outcome saturation_fixpoint() {
  std::vector<decision::NormalizedAutomaton> suite;
  for (const auto* name : {"lamplighter_plus.rat", "lamplighter_star.rat", "parity_negative.rat",
                           "free_cancel.rat", "free_reduced.rat"})
    suite.push_back(load(name));
  for (const auto& raw : odd_parity_instances(5))
    suite.push_back(decision::normalize(raw));

  std::mt19937 rng(17);
  int fixpoint = 0, unconfirmed = 0, missing_empty = 0, not_upward = 0, checked = 0, incomplete = 0;
  for (const auto& a : suite) {
    auto family = patterns::saturate(a);
    if (!family.complete()) {
      ++incomplete;
      continue;
    }
    const auto& y = family.alphabets();
    for (const auto t : all_node_types(a.rank)) {
      const auto outside =
          automata::intersect(family.candidate(t), automata::complement(family.dfa(t)));
      fixpoint += automata::emptiness_witness(*outside).has_value();
      missing_empty += !family.contains(t, Word{});

      const std::size_t k = y.x_size(t);
      std::vector<Word> members;
      for (const auto& w : words_up_to(k, 3))
        if (family.contains(t, w)) {
          members.push_back(w);
          ++checked;
          unconfirmed += !patterns::brute_force_pattern_oracle(a, y, t, w, 4, 12);
        }
      if (k == 0)
        continue;
      for (int i = 0; i < kUpwardSamples; ++i) {
        Word v = members[std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(rng)];
        const auto inserts = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int j = 0; j < inserts; ++j) {
          const auto s = std::uniform_int_distribution<Symbol>(0, static_cast<Symbol>(k - 1))(rng);
          const auto at = std::uniform_int_distribution<std::size_t>(0, v.size())(rng);
          v.insert(v.begin() + static_cast<std::ptrdiff_t>(at), a.group->exponent(), s);
        }
        not_upward += !family.contains(t, v);
      }
    }
  }
  Outcome o;
  o.pass = fixpoint == 0 && unconfirmed == 0 && missing_empty == 0 && not_upward == 0 && incomplete == 0;
  o.detail = std::to_string(suite.size()) + " instances: " + std::to_string(fixpoint) +
             " candidate escapes, " + std::to_string(unconfirmed) + "/" + std::to_string(checked) +
             " short members unconfirmed, " + std::to_string(missing_empty) + " missing empty word, " +
             std::to_string(not_upward) + " superwords outside, " + std::to_string(incomplete) +
             " incomplete";
  return o;
}

Outcome minsky_end_to_end() {
  const auto start = Clock::now();
  const auto eq = io::load_machine(fixture("machines/equality.mach"));
  const auto g = minsky::build_generators(eq);
  int errors = 0;
  for (std::uint64_t m = 0; m <= 5; ++m)
    for (std::uint64_t n = 0; n <= 5; ++n) {
      const auto run = minsky::reach_final(eq, m, n, 200);
      if (m != n) {
        errors += run.has_value();
        continue;
      }
      if (!run) {
        ++errors;
        continue;
      }
      const auto t = minsky::translate(eq, g, *run);
      errors += !minsky::verify_translation(g, eq, m, n, t.word);
    }

  const auto families = io::load_machine(fixture("machines/all_families.mach"));
  const auto pg = minsky::build_generators(families);
  const std::vector<std::pair<std::string, std::size_t>> lists{
      {"zero_test.txt", pg.by_transition[0]}, {"increment.txt", pg.by_transition[1]},
      {"decrement.txt", pg.by_transition[2]}, {"copy.txt", pg.copy},
      {"copy_last.txt", pg.copy_last},        {"terminate.txt", *pg.by_final[families.index("qf")]},
      {"go_left.txt", pg.go_left}};
  int golden_mismatches = 0;
  for (const auto& [file, i] : lists)
    golden_mismatches +=
        read_text(fixture("golden/" + file)) != render_list(pg.generators[i].element, pg.sigma) + "\n";
  golden_mismatches += read_text(fixture("golden/initial_m1_n2.txt")) !=
                       render_list(minsky::initial_element(pg, families, 1, 2), pg.sigma) + "\n";
  const double t = seconds_since(start);
  Outcome o;
  o.pass = errors == 0 && golden_mismatches == 0 && t < kMinskySeconds;
  o.detail = std::to_string(errors) + " wrong outcomes over m,n <= 5, " +
             std::to_string(golden_mismatches) + "/8 golden mismatches, " + std::to_string(t) +
             " s (limit " + std::to_string(kMinskySeconds) + " s)";
  return o;
}

Outcome conservation() {
  const auto families = io::load_machine(fixture("machines/all_families.mach"));
  const auto g = minsky::build_generators(families);
  std::mt19937 rng(19);
  int violations = 0;
  for (int i = 0; i < kConservationElements; ++i) {
    const auto x = random_vector_line(rng, g.sigma.size());
    const int here = static_cast<int>(((x.cursor % 2) + 2) % 2);
    for (const auto& gen : g.generators) {
      const auto y = g.group.mul(x, gen.element);
      for (int b : {0, 1}) {
        const auto delta = minsky::conservation_sigma_q(g, y, b) - minsky::conservation_sigma_q(g, x, b);
        const std::int64_t expected = gen.family == minsky::Family::Terminate && b == here ? -1 : 0;
        violations += delta != expected;
      }
    }
  }
  Outcome o;
  o.pass = violations == 0;
  o.detail = std::to_string(violations) + " violations over " + std::to_string(kConservationElements) +
             " elements x " + std::to_string(g.generators.size()) + " generators";
  return o;
}

Outcome embedding() {
  const std::size_t m = 4;
  const auto v = make_vector_line_group(m);
  const auto zz = make_int_line_group();
  std::mt19937 rng(23);
  int violations = 0;
  for (int i = 0; i < kHomomorphismPairs; ++i) {
    const auto a = random_vector_line(rng, m);
    const auto b = random_vector_line(rng, m);
    violations += minsky::embed_zz(v.mul(a, b), m) != zz.mul(minsky::embed_zz(a, m), minsky::embed_zz(b, m));
  }
  int identities = 0;
  for (int i = 0; i < kReflectingElements; ++i) {
    auto x = random_vector_line(rng, m, 3);
    if (i % 10 == 0)
      x = v.identity();
    const auto e = minsky::embed_zz(x, m);
    identities += v.is_identity(x);
    violations += zz.is_identity(e) != v.is_identity(x);
    violations += e.cursor != static_cast<std::int64_t>(m) * x.cursor;
  }
  Outcome o;
  o.pass = violations == 0;
  o.detail = std::to_string(violations) + " violations (" + std::to_string(kHomomorphismPairs) +
             " pairs, " + std::to_string(kReflectingElements) + " elements, " +
             std::to_string(identities) + " identities)";
  return o;
}

Outcome determinism() {
  int differences = 0;
  int runs = 0;
  for (const auto* name : {"lamplighter_plus.rat", "parity_negative.rat", "lamplighter_target.rat",
                           "free_cancel.rat"}) {
    for (const auto& flags : std::vector<std::vector<std::string>>{{"--trace", "--certificate"},
                                                                    {"--json", "--trace", "--certificate"}}) {
      std::vector<std::string> args{"decide", automaton_path(name)};
      args.insert(args.end(), flags.begin(), flags.end());
      std::string first, second;
      const int a = run_cli(args, &first);
      const int b = run_cli(args, &second);
      differences += a != b || first != second;
      ++runs;
    }
  }
  Outcome o;
  o.pass = differences == 0;
  o.detail = std::to_string(differences) + " differing outputs over " + std::to_string(runs) + " paired runs";
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"lamplighter positive", lamplighter_positive},
      {"sound negatives", sound_negatives},
      {"classical cross-validation", benois_cross_validation},
      {"oracle one-sidedness", oracle_one_sidedness},
      {"wqo exactness", wqo_exactness},
      {"saturation soundness and fixpoint", saturation_fixpoint},
      {"counter machine end to end", minsky_end_to_end},
      {"state weight conservation", conservation},
      {"embedding into Z wr Z", embedding},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << ": "
              << criteria[i].first << ": " << o.detail << std::endl;
  }
  return failed;
}
