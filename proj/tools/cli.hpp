#pragma once

// Command-line front end. Kept as a function over argument vectors and
// streams so the test suites can drive it in-process.
//
// Exit status: 0 on a definite answer or successful output, 1 on usage,
// parse or query errors, 2 on internal failures.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "riaf/riaf.hpp"

namespace riaf::cli {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) throw UsageError("cannot write '" + path + "'");
}

inline ArgumentSet parse_set(const std::string& text) {
  ArgumentSet out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (!is_valid_name(item)) throw UsageError("invalid argument name '" + item + "'");
    out.emplace(item);
  }
  return out;
}

/// "<PROBLEM>-<sem>", e.g. "PCA-stb" or "IncNVstar-pr".
inline std::pair<ProblemKind, Semantics> parse_task(const std::string& token) {
  const auto dash = token.rfind('-');
  if (dash == std::string::npos) throw UsageError("expected <PROBLEM>-<sem>, got '" + token + "'");
  const auto problem = parse_problem(std::string_view(token).substr(0, dash));
  if (!problem) throw UsageError("unknown problem '" + token.substr(0, dash) + "'");
  const auto sem = parse_semantics(std::string_view(token).substr(dash + 1));
  if (!sem) throw UsageError("unknown semantics '" + token.substr(dash + 1) + "'");
  return {*problem, *sem};
}

struct SolveOptions {
  std::string task;
  std::string file;
  std::string argument;
  std::string set;
  bool set_given = false;
  std::string engine = "auto";
  std::string solver_command;
  bool witness = false;
  bool allow_uncertain = false;
};

inline void run_solve(const SolveOptions& opts, std::ostream& out) {
  const auto [problem, sem] = parse_task(opts.task);
  const auto engine = parse_engine(opts.engine);
  if (!engine) throw UsageError("unknown engine '" + opts.engine + "'");
  const auto riaf = parse_riaf(read_file(opts.file));

  QueryTarget target = ArgumentSet{};
  if (is_verification(problem)) {
    if (!opts.set_given) throw UsageError(std::string(to_string(problem)) + " needs -S <set>");
    target = parse_set(opts.set);
  } else {
    if (opts.argument.empty()) throw UsageError(std::string(to_string(problem)) + " needs -a <arg>");
    if (!is_valid_name(opts.argument)) throw UsageError("invalid argument name '" + opts.argument + "'");
    target = ArgumentId(opts.argument);
  }
  if (*engine == Engine::Sat && !has_sat_path(problem, sem)) {
    throw UsageError("no SAT procedure for " + opts.task + "; use --engine enum or auto");
  }

  sat::SatContext ctx;
  ctx.reasoning.allow_uncertain_query = opts.allow_uncertain;
  if (!opts.solver_command.empty()) ctx.solver_factory = sat::external_factory(opts.solver_command);

  const auto verdict = solve_query(riaf, Query{problem, sem, target}, *engine, ctx);
  out << (verdict.answer ? "YES" : "NO") << '\n';
  if (opts.witness) {
    if (verdict.witness) out << serialize_af(*verdict.witness);
    if (verdict.extension_witness) out << "% extension: " << join_names(*verdict.extension_witness) << '\n';
  }
}

inline void run_completions(const std::string& file, bool count, std::ostream& out) {
  const auto riaf = parse_riaf(read_file(file));
  if (count) {
    std::size_t n = 0;
    for_each_completion(riaf, [&](const ArgumentationFramework&) {
      ++n;
      return true;
    });
    out << n << '\n';
    return;
  }
  bool first = true;
  for_each_completion(riaf, [&](const ArgumentationFramework& af) {
    if (!first) out << '\n';
    first = false;
    out << serialize_af(af);
    return true;
  });
}

inline void run_extensions(const std::string& file, const std::string& sem_token, std::ostream& out) {
  const auto sem = parse_semantics(sem_token);
  if (!sem) throw UsageError("unknown semantics '" + sem_token + "'");
  const auto riaf = parse_riaf(read_file(file));
  if (riaf.has_uncertainty()) {
    throw UsageError("instance has uncertain elements; use 'completions' or 'solve' instead");
  }
  const ArgumentationFramework af(riaf.certain_args(), riaf.certain_attacks());
  for (const auto& ext : enumerate_extensions(af, *sem)) out << join_names(ext) << '\n';
}

inline void run_encode(const std::string& file, const std::string& which, const std::string& output,
                       std::ostream& out) {
  sat::Encoding encoding;
  if (which == "structure") {
    encoding = sat::Encoding::Structure;
  } else if (which == "ad") {
    encoding = sat::Encoding::AD;
  } else if (which == "stb") {
    encoding = sat::Encoding::STB;
  } else {
    throw UsageError("-s must be ad, stb or structure");
  }
  const auto riaf = parse_riaf(read_file(file));
  write_output(output, sat::to_dimacs(sat::encode(riaf, encoding)), out);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reasoning with rich incomplete argumentation frameworks"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Decide a possible/necessary reasoning problem");
  solve_cmd->add_option("-p,--problem", solve.task, "<PROBLEM>-<sem>, e.g. PCA-stb")->required();
  solve_cmd->add_option("-f,--file", solve.file, "Instance file")->required();
  solve_cmd->add_option("-a,--argument", solve.argument, "Queried argument");
  auto* set_opt = solve_cmd->add_option("-S,--set", solve.set, "Queried set, comma-separated");
  solve_cmd->add_option("--engine", solve.engine, "enum, sat or auto");
  solve_cmd->add_option("--solver-cmd", solve.solver_command, "External DIMACS solver command");
  solve_cmd->add_flag("--witness", solve.witness, "Print the certificate");
  solve_cmd->add_flag("--allow-uncertain-query", solve.allow_uncertain,
                      "Accept uncertain query arguments (absent means not accepted)");

  std::string file;
  bool count = false;
  auto* completions_cmd = app.add_subcommand("completions", "List or count completions");
  completions_cmd->add_option("-f,--file", file, "Instance file")->required();
  completions_cmd->add_flag("--count", count, "Print only the number of completions");

  std::string sem_token;
  auto* extensions_cmd = app.add_subcommand("extensions", "Extensions of a framework without uncertainty");
  extensions_cmd->add_option("-f,--file", file, "Instance file")->required();
  extensions_cmd->add_option("-s,--semantics", sem_token, "cf, ad, co, gr, pr or stb")->required();

  std::string encoding;
  std::string output;
  auto* encode_cmd = app.add_subcommand("encode", "Write the CNF encoding in DIMACS");
  encode_cmd->add_option("-f,--file", file, "Instance file")->required();
  encode_cmd->add_option("-s,--semantics", encoding, "ad, stb or structure")->required();
  encode_cmd->add_option("-o,--output", output, "Output path (stdout if omitted)");

  GeneratorParams gen;
  auto* generate_cmd = app.add_subcommand("generate", "Write a random instance");
  generate_cmd->add_option("--args", gen.args, "Number of arguments");
  generate_cmd->add_option("--uncertain-args", gen.uncertain_args, "Number of uncertain arguments");
  generate_cmd->add_option("--attack-prob", gen.attack_prob, "Probability of a certain attack");
  generate_cmd->add_option("--uncertain-attack-prob", gen.uncertain_attack_prob,
                           "Probability of an uncertain attack");
  generate_cmd->add_option("--sym-prob", gen.sym_prob, "Probability of a symmetric conflict");
  generate_cmd->add_option("--seed", gen.seed, "Random seed");
  generate_cmd->add_option("-o,--output", output, "Output path (stdout if omitted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve_cmd->parsed()) {
      solve.set_given = set_opt->count() > 0;
      run_solve(solve, out);
    } else if (completions_cmd->parsed()) {
      run_completions(file, count, out);
    } else if (extensions_cmd->parsed()) {
      run_extensions(file, sem_token, out);
    } else if (encode_cmd->parsed()) {
      run_encode(file, encoding, output, out);
    } else if (generate_cmd->parsed()) {
      write_output(output, serialize_riaf(generate_riaf(gen)), out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const RiafError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const QueryError& e) {
    err << "query error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace riaf::cli
