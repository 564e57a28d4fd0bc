#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <sstream>

#include "wreath/decision/decision.hpp"
#include "wreath/groups/list_notation.hpp"
#include "wreath/io/formats.hpp"
#include "wreath/minsky/encoding.hpp"
#include "wreath/minsky/machine.hpp"

namespace wreath::cli {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::optional<std::string> target;
  std::size_t cap = automata::kDefaultStateCap;
  std::size_t length = 12;
  bool trace = false;
  bool json = false;
  bool certificate = false;
  bool serial = false;

  // minsky
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::size_t steps = 200;
  bool alternate = false;
  bool zz = false;
  std::int64_t window = 16;
  std::int64_t support = 16;
  std::size_t max_states = 200'000;
};

kernels::Mode mode_of(const Options& o) {
  return o.serial ? kernels::Mode::Serial : kernels::Mode::Parallel;
}

decision::NormalizedAutomaton load_instance(const Options& o) {
  io::AutomatonFile file = io::load_automaton(o.input);
  auto& raw = file.automaton;
  if (o.target)
    raw.target = parse_tokens(*o.target, *raw.group, raw.rank);
  auto a = decision::normalize(raw);
  if (raw.target)
    a = decision::reduce_target(a, *raw.target);
  return a;
}

void report(std::ostream& out, const Options& o, const std::string& verdict,
            std::optional<std::size_t> rounds, std::optional<std::size_t> witnesses,
            std::size_t explored, const std::optional<std::string>& certificate,
            const std::vector<std::string>& trace, const std::string& error) {
  if (o.json) {
    nlohmann::ordered_json j;
    j["verdict"] = verdict;
    j["rounds"] = rounds ? nlohmann::ordered_json(*rounds) : nlohmann::ordered_json(nullptr);
    j["witnesses"] =
        witnesses ? nlohmann::ordered_json(*witnesses) : nlohmann::ordered_json(nullptr);
    j["explored"] = explored;
    j["certificate"] =
        certificate ? nlohmann::ordered_json(*certificate) : nlohmann::ordered_json(nullptr);
    if (o.trace)
      j["trace"] = trace;
    if (!error.empty())
      j["error"] = error;
    out << j.dump(2) << "\n";
    return;
  }
  out << "verdict: " << verdict << "\n";
  if (rounds)
    out << "rounds: " << *rounds << "\n";
  if (witnesses)
    out << "witnesses: " << *witnesses << "\n";
  out << "explored: " << explored << "\n";
  if (certificate)
    out << "certificate: " << *certificate << "\n";
  if (!error.empty())
    out << "error: " << error << "\n";
  if (o.trace)
    for (const auto& line : trace)
      out << line << "\n";
}

int cmd_decide(const Options& o, std::ostream& out) {
  const auto a = load_instance(o);
  const auto v = decision::decide_identity(a, {o.cap, mode_of(o)});
  std::optional<std::string> cert;
  if (o.certificate && v.certificate)
    cert = v.certificate_text + " -> " + a.state_names[*v.final_state];
  report(out, o, decision::to_string(v.answer), v.rounds, v.witnesses, v.explored, cert, v.trace,
         v.error);
  switch (v.answer) {
  case decision::Answer::Yes:
    return kYes;
  case decision::Answer::No:
    return kNo;
  case decision::Answer::ResourceExhausted:
    return kUnknown;
  }
  return kInternal;
}

int cmd_benois(const Options& o, std::ostream& out) {
  const auto a = load_instance(o);
  if (a.group->order() != 1)
    throw UsageError("benois needs the trivial lamp group, got order " +
                     std::to_string(a.group->order()));
  const bool yes = decision::benois_oracle(a);
  report(out, o, yes ? "member" : "non-member", std::nullopt, std::nullopt, 0, std::nullopt, {},
         "");
  return yes ? kYes : kNo;
}

int cmd_path_oracle(const Options& o, std::ostream& out) {
  const auto a = load_instance(o);
  const auto r = decision::path_oracle(a, o.length, mode_of(o));
  std::optional<std::string> cert;
  if (r.found && o.certificate) {
    TokenWord path;
    for (std::size_t e : r.path)
      path.push_back(a.edges[e].label);
    cert = path.empty() ? "1" : format_tokens(path, *a.group);
  }
  report(out, o, r.found ? "member" : "unknown", std::nullopt, std::nullopt, r.explored, cert, {},
         "");
  if (r.found && !o.json)
    out << "length: " << r.path.size() << "\n";
  return r.found ? kYes : kUnknown;
}

int cmd_format(const Options& o, std::ostream& out) {
  out << io::write_automaton(io::load_automaton(o.input));
  return kYes;
}

minsky::CounterMachine load_machine(const Options& o, bool need_partition) {
  auto c = io::load_machine(o.input);
  if (o.alternate)
    return minsky::make_alternating(c);
  if (need_partition && !c.alternating())
    throw UsageError("machine has no partition; pass --alternate");
  return c;
}

std::string config_text(const minsky::CounterMachine& c, const minsky::MachineConfig& x) {
  return "(" + c.states[x.state] + "," + std::to_string(x.c0) + "," + std::to_string(x.c1) + ")";
}

std::string transition_text(const minsky::CounterMachine& c, const minsky::Transition& t) {
  return c.states[t.from] + " " + std::to_string(t.counter) + " " + minsky::to_string(t.op) + " " +
         c.states[t.to];
}

int cmd_minsky_encode(const Options& o, std::ostream& out) {
  const auto c = load_machine(o, true);
  const auto gens = minsky::build_generators(c);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < gens.generators.size(); ++i)
    labels.push_back(gens.label(c, i));
  out << io::write_generators(io::generator_file(gens, o.zz), labels);
  return kYes;
}

int cmd_minsky_alternate(const Options& o, std::ostream& out) {
  out << io::write_machine(minsky::make_alternating(io::load_machine(o.input)));
  return kYes;
}

int cmd_minsky_run(const Options& o, std::ostream& out) {
  const auto c = load_machine(o, false);
  const auto run = minsky::reach_final(c, o.m, o.n, o.steps);
  if (!run) {
    out << "none\n";
    return kNo;
  }
  out << "steps: " << run->steps() << "\n";
  for (std::size_t i = 0; i < run->configs.size(); ++i) {
    out << "config " << config_text(c, run->configs[i]) << "\n";
    if (i < run->transitions.size())
      out << "trans " << transition_text(c, c.transitions[run->transitions[i]]) << "\n";
  }
  return kYes;
}

std::string join_indices(const std::vector<std::size_t>& word) {
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i)
    s += (i ? " " : "") + std::to_string(word[i]);
  return s;
}

int cmd_minsky_translate(const Options& o, std::ostream& out) {
  const auto c = load_machine(o, true);
  const auto gens = minsky::build_generators(c);
  const auto run = minsky::reach_final(c, o.m, o.n, o.steps);
  if (!run) {
    out << "none\n";
    return kNo;
  }
  const auto y = minsky::translate(c, gens, *run);
  const bool ok = minsky::verify_translation(gens, c, o.m, o.n, y.word);
  const std::string claim =
      "I(" + std::to_string(o.m) + "," + std::to_string(o.n) + ")·Y = 1";
  out << "steps: " << run->steps() << "\nY: " << join_indices(y.word)
      << "\nlength: " << y.word.size() << "\ngo-left: " << y.go_left_count << "\n"
      << (ok ? "verified: " : "failed: ") << claim << "\n";
  return ok ? kYes : kInternal;
}

int cmd_minsky_bfs(const Options& o, std::ostream& out) {
  const auto c = load_machine(o, true);
  const auto gens = minsky::build_generators(c);
  const auto target = gens.group.inv(minsky::initial_element(gens, c, o.m, o.n));
  const auto r = minsky::bfs_membership(
      target, gens, {o.length, o.window, o.support, o.max_states}, mode_of(o));
  out << (r.found ? "found" : "not-found") << "\nexplored: " << r.explored << "\n";
  if (r.found)
    out << "Y: " << join_indices(r.word) << "\n";
  return r.found ? kYes : kUnknown;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational subset membership in H wr F_r and the two-counter encoding into Z wr Z",
               "wreath"};
  app.require_subcommand(1);
  Options o;

  auto add_instance = [&](CLI::App* cmd) {
    cmd->add_option("automaton", o.input, "Automaton file")->required();
    cmd->add_option("--target", o.target, "Target element as tokens (default: identity)");
    cmd->add_flag("--json", o.json, "Machine-readable output");
    cmd->add_flag("--serial", o.serial, "Serial kernels only");
  };
  auto* decide = app.add_subcommand("decide", "Decide membership with the saturation procedure");
  add_instance(decide);
  decide->add_option("--cap", o.cap, "Explored-state cap per automaton")
      ->check(CLI::PositiveNumber);
  decide->add_flag("--trace", o.trace, "Print the saturation log");
  decide->add_flag("--certificate", o.certificate, "Print the membership certificate");

  auto* benois = app.add_subcommand("benois", "Benois saturation (trivial lamp group only)");
  add_instance(benois);

  auto* oracle = app.add_subcommand("path-oracle", "Bounded search for an identity path");
  add_instance(oracle);
  oracle->add_option("--length", o.length, "Maximal path length")->check(CLI::PositiveNumber);
  oracle->add_flag("--certificate", o.certificate, "Print the path");

  auto* format = app.add_subcommand("format", "Print an automaton file in canonical form");
  format->add_option("automaton", o.input, "Automaton file")->required();

  auto* minsky = app.add_subcommand("minsky", "Two-counter machines and their encoding");
  minsky->require_subcommand(1);
  auto add_machine = [&](CLI::App* cmd, bool inputs) {
    cmd->add_option("machine", o.input, "Machine file")->required();
    if (inputs) {
      cmd->add_option("m", o.m, "Initial value of counter 0")->required();
      cmd->add_option("n", o.n, "Initial value of counter 1")->required();
    }
    cmd->add_flag("--alternate", o.alternate, "Make the machine alternate first");
  };
  auto* encode = minsky->add_subcommand("encode", "Print the generators in list notation");
  add_machine(encode, false);
  encode->add_flag("--zz", o.zz, "Also print the images in Z wr Z");
  auto* alternate = minsky->add_subcommand("alternate", "Print the alternating machine");
  alternate->add_option("machine", o.input, "Machine file")->required();
  auto* run_cmd = minsky->add_subcommand("run", "Shortest halting computation");
  add_machine(run_cmd, true);
  run_cmd->add_option("--steps", o.steps, "Step bound")->check(CLI::PositiveNumber);
  auto* translate = minsky->add_subcommand("translate", "Generator word Y with I(m,n)Y = 1");
  add_machine(translate, true);
  translate->add_option("--steps", o.steps, "Step bound")->check(CLI::PositiveNumber);
  auto* bfs = minsky->add_subcommand("bfs", "Bounded search for I(m,n)^-1 in the submonoid");
  add_machine(bfs, true);
  bfs->add_option("--length", o.length, "Maximal word length")->check(CLI::PositiveNumber);
  bfs->add_option("--window", o.window, "Cursor window")->check(CLI::PositiveNumber);
  bfs->add_option("--support", o.support, "Lamp support window")->check(CLI::PositiveNumber);
  bfs->add_option("--max-states", o.max_states, "State cap")->check(CLI::PositiveNumber);
  bfs->add_flag("--serial", o.serial, "Serial kernels only");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kYes : kUsage;
  }

  try {
    if (decide->parsed())
      return cmd_decide(o, out);
    if (benois->parsed())
      return cmd_benois(o, out);
    if (oracle->parsed())
      return cmd_path_oracle(o, out);
    if (format->parsed())
      return cmd_format(o, out);
    if (encode->parsed())
      return cmd_minsky_encode(o, out);
    if (alternate->parsed())
      return cmd_minsky_alternate(o, out);
    if (run_cmd->parsed())
      return cmd_minsky_run(o, out);
    if (translate->parsed())
      return cmd_minsky_translate(o, out);
    if (bfs->parsed())
      return cmd_minsky_bfs(o, out);
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownToken& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

} // namespace wreath::cli
