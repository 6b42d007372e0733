// rr: command-line front end for the regular-realizability toolkit.
//
// Exit codes: 0 success or "yes", 1 "no", 2 usage error, 3 invalid input,
// 4 self-test failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rr/analysis.hpp"
#include "rr/automata.hpp"
#include "rr/coding.hpp"
#include "rr/error.hpp"
#include "rr/generator.hpp"
#include "rr/oracle.hpp"
#include "rr/reductions.hpp"
#include "rr/selftest.hpp"

namespace {

enum Exit { kOk = 0, kNo = 1, kUsage = 2, kInvalid = 3, kSelftestFailed = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw rr::Error(rr::ErrorCode::MalformedInput, "cannot read " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

rr::Dfa read_dfa(const std::string& path) { return rr::parse_dfa(read_input(path)); }

int yes_no(bool answer) {
  std::cout << (answer ? "yes" : "no") << "\n";
  return answer ? kOk : kNo;
}

const char* flag(bool b) { return b ? "true" : "false"; }

void print_words(const char* heading, const rr::WordList& words) {
  std::cout << heading << "\n";
  for (const rr::Word& w : words) std::cout << rr::cli_spelling(w) << "\n";
}

rr::Word encode(const std::string& map, const rr::Word& x) {
  if (map == "beta") return rr::beta_encode(x);
  if (map == "ex") return rr::ex_encode(x);
  return rr::dex_encode(x);
}

rr::Word decode(const std::string& map, const rr::Word& w) {
  if (map == "beta") return rr::beta_decode(w);
  if (map == "dex") return rr::dex_decode(w);
  rr::require_binary(w);
  auto x = rr::ex_decode(w);
  if (!x) throw rr::Error(rr::ErrorCode::NotInImage, "'" + rr::cli_spelling(w) + "' is not in D");
  return *x;
}

int analyze(const rr::Dfa& dfa) {
  const bool finite = rr::is_finite(dfa);
  std::cout << "states: " << dfa.state_count() << "\n";
  std::cout << "finite: " << flag(finite) << "\n";
  std::cout << "simple: " << flag(rr::unique_word(dfa).has_value()) << "\n";
  const bool binary = dfa.alphabet() == "01" || dfa.alphabet() == "10";
  const bool subset_d = binary && rr::finite_and_subset_d(dfa);
  const bool subset_dext = binary && rr::subset_dext(dfa);
  std::cout << "subset_D: " << (binary ? flag(subset_d) : "n/a") << "\n";
  std::cout << "subset_Dext: " << (binary ? flag(subset_dext) : "n/a") << "\n";
  if (finite)
    std::cout << "word_count: " << rr::enumerate_language(dfa).size() << "\n";
  else
    std::cout << "word_count: infinite\n";
  if (subset_d) print_words("d_words:", rr::enumerate_d_words(dfa));
  if (subset_dext) print_words("d_prefixes:", rr::enumerate_d_prefixes(dfa));
  return kOk;
}

rr::Probability parse_probability(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (text == "0") return {0, 1};
      if (text == "1") return {1, 1};
      throw UsageError("");
    }
    std::size_t used = 0;
    const auto num = std::stoull(text.substr(0, slash), &used);
    if (used != slash) throw UsageError("");
    const auto den = std::stoull(text.substr(slash + 1), &used);
    if (used != text.size() - slash - 1) throw UsageError("");
    return {num, den};
  } catch (const std::exception&) {
    throw UsageError("--accept expects a fraction such as 1/2, got '" + text + "'");
  }
}

rr::WordList parse_word_list(const std::string& text) {
  rr::WordList words;
  if (text.empty()) return words;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) words.push_back(rr::parse_cli_word(item));
  return words;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular realizability toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 42;
  std::string format = "text";
  app.add_option("--seed", seed, "Seed for generators and self-test")->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text"}))->capture_default_str();

  std::string map, variant, lang, input, word, alphabet = "01";

  auto* encode_cmd = app.add_subcommand("encode", "Apply beta, ex or dex to a word ('@' is the empty word)");
  encode_cmd->add_option("--map", map)->required()->check(CLI::IsMember({"beta", "ex", "dex"}));
  encode_cmd->add_option("word", word)->required();

  auto* decode_cmd = app.add_subcommand("decode", "Invert beta, ex or dex");
  decode_cmd->add_option("--map", map)->required()->check(CLI::IsMember({"beta", "ex", "dex"}));
  decode_cmd->add_option("word", word)->required();

  auto* singleton_cmd = app.add_subcommand("singleton", "Minimal DFA accepting one word");
  singleton_cmd->add_option("--alphabet", alphabet)->capture_default_str();
  singleton_cmd->add_option("word", word)->required();

  auto* forward_cmd = app.add_subcommand("forward", "Forward reduction x -> DFA for {ex(x)}");
  forward_cmd->add_option("--variant", variant)->required()->check(CLI::IsMember({"flat", "prefix"}));
  forward_cmd->add_option("word", word)->required();

  auto* backward_cmd = app.add_subcommand("backward", "Backward reduction DFA -> query list");
  backward_cmd->add_option("--variant", variant)->required()->check(CLI::IsMember({"flat", "prefix"}));
  backward_cmd->add_option("dfa", input)->required();

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a query list against a language");
  eval_cmd->add_option("--lang", lang)->required();
  eval_cmd->add_option("querylist", input)->required();

  auto* decide_cmd = app.add_subcommand("decide", "Decide whether L(A) meets a filter");
  decide_cmd->add_option("--variant", variant)->required()->check(
      CLI::IsMember({"flat", "prefix", "literal", "rawD"}));
  decide_cmd->add_option("--lang", lang);
  decide_cmd->add_option("dfa", input)->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Report finiteness, simplicity and D tests");
  analyze_cmd->add_option("dfa", input)->required();

  auto* hash_cmd = app.add_subcommand("hash-close", "Absorb #-suffixes into acceptance");
  hash_cmd->add_option("dfa", input)->required();

  auto* minimize_cmd = app.add_subcommand("minimize", "Minimize and renumber canonically");
  minimize_cmd->add_option("dfa", input)->required();

  std::string family = "random", accept = "1/2", words_text;
  std::uint32_t max_states = 4;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded DFA");
  gen_cmd->add_option("--family", family)
      ->check(CLI::IsMember({"random", "union", "ex-tail", "beta-cycle"}))
      ->capture_default_str();
  gen_cmd->add_option("--max-states", max_states)->capture_default_str();
  gen_cmd->add_option("--accept", accept, "Accept probability as a fraction")->capture_default_str();
  gen_cmd->add_option("--alphabet", alphabet)->capture_default_str();
  gen_cmd->add_option("--words", words_text, "Comma-separated words for structured families");

  std::vector<std::string> suites;
  std::size_t trials = 0;
  bool serial = false;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suites");
  selftest_cmd->add_option("--suite", suites, "Run only this suite (repeatable)");
  selftest_cmd->add_option("--trials", trials, "Trial count for every randomized suite");
  selftest_cmd->add_flag("--serial", serial, "Run suites one after another");
  selftest_cmd->add_flag_callback("--list", [] {
    for (const std::string& name : rr::suite_names()) std::cout << name << "\n";
    std::exit(kOk);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*encode_cmd) {
      const rr::Word x = rr::parse_cli_word(word);
      rr::require_binary(x);
      std::cout << rr::cli_spelling(encode(map, x)) << "\n";
      return kOk;
    }
    if (*decode_cmd) {
      const rr::Word w = rr::parse_cli_word(word);
      rr::require_binary(w);
      std::cout << rr::cli_spelling(decode(map, w)) << "\n";
      return kOk;
    }
    if (*singleton_cmd) {
      std::cout << rr::serialize(rr::singleton_dfa(rr::parse_cli_word(word), alphabet));
      return kOk;
    }
    if (*forward_cmd) {
      std::cout << rr::serialize(rr::forward_reduction(rr::parse_cli_word(word)));
      return kOk;
    }
    if (*backward_cmd) {
      const auto v = variant == "flat" ? rr::ReductionVariant::Flat : rr::ReductionVariant::Prefix;
      std::cout << rr::encode_query_list(rr::backward(read_dfa(input), v));
      return kOk;
    }
    if (*eval_cmd) {
      const rr::LanguageSpec x = rr::LanguageSpec::parse(lang);
      return yes_no(rr::eval_dtt(rr::decode_query_list(read_input(input)), x));
    }
    if (*decide_cmd) {
      const rr::Dfa dfa = read_dfa(input);
      if (variant == "rawD") return yes_no(rr::decide_reg_exact(dfa, rr::FilterKind::raw_d()));
      if (lang.empty()) throw UsageError("--lang is required for --variant " + variant);
      const rr::LanguageSpec x = rr::LanguageSpec::parse(lang);
      if (variant == "flat") return yes_no(rr::decide_reg_exact(dfa, rr::FilterKind::flat(x)));
      if (variant == "prefix") return yes_no(rr::decide_reg_exact(dfa, rr::FilterKind::prefix(x)));
      return yes_no(rr::decide_reg_exact(dfa, rr::FilterKind::literal_dex(x)));
    }
    if (*analyze_cmd) return analyze(read_dfa(input));
    if (*hash_cmd) {
      std::cout << rr::serialize(rr::absorb_hash_suffix(read_dfa(input)));
      return kOk;
    }
    if (*minimize_cmd) {
      std::cout << rr::serialize(rr::minimize(read_dfa(input)));
      return kOk;
    }
    if (*gen_cmd) {
      rr::GeneratorConfig config;
      config.seed = seed;
      config.max_states = max_states;
      config.accept_probability = parse_probability(accept);
      config.alphabet = alphabet;
      config.words = parse_word_list(words_text);
      if (family == "random")
        config.family = rr::Family::Random;
      else if (family == "union")
        config.family = rr::Family::UnionOfSingletons;
      else if (family == "ex-tail")
        config.family = rr::Family::ExWordTail;
      else
        config.family = rr::Family::BetaCycle;
      std::cout << rr::serialize(rr::random_dfa(config));
      return kOk;
    }
    if (*selftest_cmd) {
      rr::SelftestOptions options;
      options.seed = seed;
      options.only = suites;
      options.parallel = !serial;
      if (trials > 0)
        for (const std::string& name : rr::suite_names()) options.trials[name] = trials;
      const rr::SelftestReport report = rr::run_selftest(options);
      std::cout << "selftest seed=" << seed << "\n" << report.text();
      return report.passed() ? kOk : kSelftestFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "rr: " << e.what() << "\n";
    return kUsage;
  } catch (const rr::Error& e) {
    std::cerr << "rr: " << e.what() << "\n";
    return e.code() == rr::ErrorCode::BadConfig ? kUsage : kInvalid;
  }
  return kUsage;
}
