// wreathlab: exact arithmetic and verification for iterated wreath products
// of cyclic groups and the twisted-shift group Z x| Z^n.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wreathlab/generators.hpp"
#include "wreathlab/morse_orbit.hpp"
#include "wreathlab/text.hpp"
#include "wreathlab/two_level.hpp"
#include "wreathlab/verify.hpp"

namespace {

using nlohmann::json;
using namespace wreathlab;

constexpr int kExitSuccess = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::size_t default_limit() {
  if (const char* env = std::getenv("WREATHLAB_LIMIT")) {
    try {
      long long value = std::stoll(env);
      if (value >= 1) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid WREATHLAB_LIMIT\n";
  }
  return kDefaultClosureLimit;
}

struct CommonFlags {
  std::string sig_text;
  bool as_json = false;
  std::size_t limit = default_limit();
};

PhiVariant variant_flag(bool use_unsigned) {
  return use_unsigned ? PhiVariant::Unsigned : PhiVariant::Signed;
}

void emit(const json& payload, const std::string& text, bool as_json) {
  if (as_json) {
    std::cout << payload.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
}

json closure_json(const std::vector<TreeElement>& elements) {
  json items = json::array();
  for (const TreeElement& g : elements) items.push_back(element_to_json(g));
  return json{{"count", elements.size()}, {"elements", items}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computations in iterated wreath products of cyclic groups "
               "and the twisted-shift group Z x| Z^n"};
  app.require_subcommand(1);
  auto as_json = std::make_shared<bool>(false);

  int exit_code = kExitSuccess;
  std::size_t limit = default_limit();

  // ---- tree element commands ----------------------------------------
  std::string sig_text;
  std::vector<std::string> literals;
  std::string literal_arg;
  std::string leaf_text;

  auto* mul_cmd = app.add_subcommand(
      "mul", "multiply element literals left to right: mul --sig S ELEM ELEM...");
  mul_cmd->add_option("--sig", sig_text, "signature, e.g. 2x3x5")->required();
  mul_cmd->allow_extras();
  mul_cmd->callback([&]() {
    std::vector<std::string> args = mul_cmd->remaining();
    if (args.size() < 2) throw CLI::ValidationError("mul", "needs at least two element literals");
    Signature sig = parse_signature(sig_text);
    TreeElement acc(sig);
    for (const std::string& text : args) acc = mul(acc, parse_element(sig, text));
    emit(element_to_json(acc), format_element(acc), *as_json);
  });

  auto* inv_cmd = app.add_subcommand("inv", "invert an element");
  inv_cmd->add_option("--sig", sig_text, "signature")->required();
  inv_cmd->add_option("element", literal_arg, "element literal")->required();
  inv_cmd->callback([&]() {
    Signature sig = parse_signature(sig_text);
    TreeElement g = inv(parse_element(sig, literal_arg));
    emit(element_to_json(g), format_element(g), *as_json);
  });

  auto* order_cmd = app.add_subcommand("order", "order of an element");
  order_cmd->add_option("--sig", sig_text, "signature")->required();
  order_cmd->add_option("element", literal_arg, "element literal")->required();
  order_cmd->callback([&]() {
    Signature sig = parse_signature(sig_text);
    long long value = element_order(parse_element(sig, literal_arg));
    emit(json{{"order", value}}, std::to_string(value), *as_json);
  });

  auto* act_cmd = app.add_subcommand("act", "image of a leaf under an element");
  act_cmd->add_option("--sig", sig_text, "signature")->required();
  act_cmd->add_option("element", literal_arg, "element literal")->required();
  act_cmd->add_option("--leaf", leaf_text, "leaf digits, e.g. 0,1")->required();
  act_cmd->callback([&]() {
    Signature sig = parse_signature(sig_text);
    LeafWord image = act_on_leaf(parse_element(sig, literal_arg), parse_leaf(sig, leaf_text));
    emit(leaf_to_json(image), format_leaf(image), *as_json);
  });

  auto* closure_cmd = app.add_subcommand(
      "closure", "BFS subgroup closure: closure --sig S ELEM...");
  closure_cmd->add_option("--sig", sig_text, "signature")->required();
  closure_cmd->allow_extras();
  closure_cmd->add_option("--limit", limit, "element limit (default WREATHLAB_LIMIT or 1e6)");
  closure_cmd->callback([&]() {
    Signature sig = parse_signature(sig_text);
    std::vector<TreeElement> gens;
    for (const std::string& text : closure_cmd->remaining()) gens.push_back(parse_element(sig, text));
    auto elements = wreath_closure(sig, gens, limit);
    if (*as_json) {
      std::cout << closure_json(elements).dump() << "\n";
    } else {
      std::cout << "count " << elements.size() << "\n";
      for (const TreeElement& g : elements) std::cout << format_element(g) << "\n";
    }
  });

  // ---- generator commands -------------------------------------------
  bool want_canonical = false;
  bool want_level = false;
  std::string spine_text;

  auto* gens_cmd = app.add_subcommand(
      "gens", "rooted/directed generating pair (default), canonical or per-level sets");
  gens_cmd->add_option("--sig", sig_text, "signature")->required();
  gens_cmd->add_flag("--canonical", want_canonical, "canonical set via lcm extraction");
  gens_cmd->add_flag("--level", want_level, "one single-label generator per level");
  gens_cmd->add_option("--spine", spine_text, "ray digits for the directed generator, e.g. 1,1");
  gens_cmd->callback([&]() {
    Signature sig = parse_signature(sig_text);
    std::vector<TreeElement> gens;
    if (want_canonical) {
      gens = canonical_generators(sig);
    } else if (want_level) {
      gens = level_generators(sig);
    } else {
      gens.push_back(rooted_generator(sig));
      if (sig.levels() >= 2) {
        if (spine_text.empty()) {
          gens.push_back(directed_generator(sig));
        } else {
          SpinePath spine;
          for (long long digit : json::parse("[" + spine_text + "]").get<std::vector<long long>>()) {
            spine.push_back(static_cast<int>(digit));
          }
          gens.push_back(directed_generator(sig, spine));
        }
      }
    }
    if (*as_json) {
      json items = json::array();
      for (const TreeElement& g : gens) items.push_back(element_to_json(g));
      std::cout << items.dump() << "\n";
    } else {
      for (const TreeElement& g : gens) std::cout << format_element(g) << "\n";
    }
  });

  auto* verify_gen_cmd = app.add_subcommand(
      "verify-gen", "check that generators fill the whole group");
  verify_gen_cmd->add_option("--sig", sig_text, "signature")->required();
  verify_gen_cmd->allow_extras();
  verify_gen_cmd->add_flag("--canonical", want_canonical, "use the canonical set");
  verify_gen_cmd->add_option("--limit", limit, "closure element limit");
  verify_gen_cmd->callback([&]() {
    Signature sig = parse_signature(sig_text);
    std::vector<std::string> args = verify_gen_cmd->remaining();
    std::vector<TreeElement> gens;
    if (want_canonical) {
      gens = canonical_generators(sig);
    } else if (!args.empty()) {
      for (const std::string& text : args) gens.push_back(parse_element(sig, text));
    } else {
      gens.push_back(rooted_generator(sig));
      if (sig.levels() >= 2) gens.push_back(directed_generator(sig));
    }
    auto elements = wreath_closure(sig, gens, limit);
    bool generated = BigInt(elements.size()) == group_order(sig);
    emit(json{{"generates", generated},
              {"closure", elements.size()},
              {"group_order", group_order(sig).str()}},
         std::string(generated ? "true" : "false") + " (closure " +
             std::to_string(elements.size()) + ", group order " + group_order(sig).str() + ")",
         *as_json);
    if (!generated) exit_code = kExitVerificationFailure;
  });

  // ---- two-level wreath commands --------------------------------------
  int active_order = 2;
  int point_count = 2;
  int passive_order = 2;
  std::string passive_sig_text;

  auto add_wreath_flags = [&](CLI::App* cmd) {
    cmd->add_option("--active", active_order, "active cyclic order r")->required();
    cmd->add_option("--points", point_count, "set size n (shift action x -> x + a mod n)")
        ->required();
    cmd->add_option("--passive", passive_order, "passive cyclic order m");
    cmd->add_option("--passive-sig", passive_sig_text,
                    "enumerate the passive group from a signature instead");
  };
  auto make_wreath = [&]() {
    if (!passive_sig_text.empty()) {
      return TwoLevelWreath(active_order, point_count,
                            PassiveGroup::enumerated(parse_signature(passive_sig_text), limit));
    }
    return TwoLevelWreath(active_order, point_count, passive_order);
  };

  auto* comm_test_cmd = app.add_subcommand("comm-test", "commutator subgroup membership");
  add_wreath_flags(comm_test_cmd);
  comm_test_cmd->add_option("pair", literal_arg, "pair literal (a; b1,...,bn)")->required();
  comm_test_cmd->callback([&]() {
    TwoLevelWreath w = make_wreath();
    WreathPair x = parse_pair(w, literal_arg);
    bool member = is_in_commutator(w, x);
    emit(json{{"in_commutator", member}}, member ? "true" : "false", *as_json);
    if (!member) exit_code = kExitVerificationFailure;
  });

  auto* comm_gens_cmd = app.add_subcommand(
      "comm-gens", "generating pairs for the commutator subgroup of Z_n wr Z_m");
  comm_gens_cmd->add_option("--points", point_count, "n")->required();
  comm_gens_cmd->add_option("--passive", passive_order, "m")->required();
  comm_gens_cmd->callback([&]() {
    auto gens = commutator_generators(point_count, passive_order);
    if (*as_json) {
      json items = json::array();
      for (const WreathPair& h : gens) items.push_back(pair_to_json(h));
      std::cout << items.dump() << "\n";
    } else {
      for (const WreathPair& h : gens) std::cout << format_pair(h) << "\n";
    }
  });

  auto* abelianize_cmd = app.add_subcommand("abelianize", "invariant factors of W/W'");
  add_wreath_flags(abelianize_cmd);
  abelianize_cmd->callback([&]() {
    TwoLevelWreath w = make_wreath();
    Abelianization ab = abelianization(w);
    std::string text = "factors";
    for (long long f : ab.invariant_factors) text += " Z" + std::to_string(f);
    text += ", quotient order " + std::to_string(ab.quotient_order);
    emit(json{{"invariant_factors", ab.invariant_factors},
              {"quotient_order", ab.quotient_order}},
         text, *as_json);
  });

  bool use_oracle = false;
  auto* center_cmd = app.add_subcommand("center", "center of the two-level wreath product");
  add_wreath_flags(center_cmd);
  center_cmd->add_flag("--oracle", use_oracle, "exhaustive commutation instead of the formula");
  center_cmd->add_option("--limit", limit, "enumeration limit for --oracle");
  center_cmd->callback([&]() {
    TwoLevelWreath w = make_wreath();
    auto elements = use_oracle ? center_oracle(w, limit) : center(w);
    if (*as_json) {
      json items = json::array();
      for (const WreathPair& z : elements) items.push_back(pair_to_json(z));
      std::cout << json{{"count", elements.size()}, {"elements", items}}.dump() << "\n";
    } else {
      std::cout << "count " << elements.size() << "\n";
      for (const WreathPair& z : elements) std::cout << format_pair(z) << "\n";
    }
  });

  // ---- twisted-shift group commands -----------------------------------
  int rank = 2;
  bool use_unsigned = false;
  auto add_h_flags = [&](CLI::App* cmd) {
    cmd->add_option("--n", rank, "rank of the Z^n part")->required();
    cmd->add_flag("--unsigned", use_unsigned, "plain cyclic shift (default: signed)");
    cmd->add_flag("--signed", [](std::int64_t) {}, "signed shift (default)");
  };

  auto* h_mul_cmd = app.add_subcommand(
      "h-mul", "multiply (k; s1,...,sn) literals: h-mul --n N ELEM ELEM...");
  add_h_flags(h_mul_cmd);
  h_mul_cmd->allow_extras();
  h_mul_cmd->callback([&]() {
    std::vector<std::string> args = h_mul_cmd->remaining();
    if (args.size() < 2) throw CLI::ValidationError("h-mul", "needs at least two element literals");
    PhiVariant variant = variant_flag(use_unsigned);
    HElement acc = h_identity(rank, variant);
    for (const std::string& text : args) {
      acc = h_mul(acc, parse_h_element(rank, variant, text));
    }
    emit(h_element_to_json(acc), format_h_element(acc), *as_json);
  });

  auto* h_norm_cmd = app.add_subcommand("h-normalize", "left normal form of a word");
  add_h_flags(h_norm_cmd);
  h_norm_cmd->add_option("word", literal_arg, "word, e.g. \"t1 r^2 t3^-1\"")->required();
  h_norm_cmd->callback([&]() {
    PhiVariant variant = variant_flag(use_unsigned);
    HElement normal = normalize(parse_word(rank, literal_arg), rank, variant);
    emit(h_element_to_json(normal), format_h_element(normal), *as_json);
  });

  auto* h_trivial_cmd = app.add_subcommand("h-trivial", "does the word normalize to 1?");
  add_h_flags(h_trivial_cmd);
  h_trivial_cmd->add_option("word", literal_arg, "word")->required();
  h_trivial_cmd->callback([&]() {
    PhiVariant variant = variant_flag(use_unsigned);
    bool trivial = is_trivial_word(parse_word(rank, literal_arg), rank, variant);
    emit(json{{"trivial", trivial}}, trivial ? "true" : "false", *as_json);
    if (!trivial) exit_code = kExitVerificationFailure;
  });

  auto* h_rel_cmd = app.add_subcommand("h-relations", "check the defining relations");
  add_h_flags(h_rel_cmd);
  h_rel_cmd->callback([&]() {
    PhiVariant variant = variant_flag(use_unsigned);
    RelationReport report = check_relations(rank, variant);
    if (*as_json) {
      json items = json::array();
      for (const RelationCheck& check : report.checks) {
        items.push_back({{"relation", check.name}, {"passed", check.passed}});
      }
      std::cout << items.dump() << "\n";
    } else {
      for (const RelationCheck& check : report.checks) {
        std::cout << (check.passed ? "pass " : "FAIL ") << check.name << "\n";
      }
    }
    if (!report.all_passed()) exit_code = kExitVerificationFailure;
  });

  auto* h_central_cmd = app.add_subcommand("h-central", "is the element central?");
  add_h_flags(h_central_cmd);
  h_central_cmd->add_option("element", literal_arg, "element literal")->required();
  h_central_cmd->callback([&]() {
    PhiVariant variant = variant_flag(use_unsigned);
    bool central = is_central(parse_h_element(rank, variant, literal_arg));
    emit(json{{"central", central}}, central ? "true" : "false", *as_json);
    if (!central) exit_code = kExitVerificationFailure;
  });

  // ---- verification suite ---------------------------------------------
  std::string scale_text = "small";
  auto* verify_all_cmd = app.add_subcommand("verify-all", "run every structural claim");
  verify_all_cmd->add_option("--scale", scale_text, "small (closures capped at 1e5) or full")
      ->check(CLI::IsMember({"small", "full"}));
  verify_all_cmd->callback([&]() {
    VerifyScale scale = scale_text == "full" ? VerifyScale::Full : VerifyScale::Small;
    VerifyReport report = run_verification(scale);
    if (*as_json) {
      std::cout << report_to_json(report).dump() << "\n";
    } else {
      for (const ClaimResult& claim : report.claims) {
        std::string tag = claim.status == "info" ? "INFO" : (claim.status == "pass" ? "PASS" : "FAIL");
        std::cout << tag << " " << claim.claim << " [" << claim.paper_ref << "]\n"
                  << "     " << claim.detail << "\n";
      }
    }
    if (!report.all_passed()) exit_code = kExitVerificationFailure;
  });

  for (CLI::App* sub :
       {mul_cmd, inv_cmd, order_cmd, act_cmd, closure_cmd, gens_cmd, verify_gen_cmd,
        comm_test_cmd, comm_gens_cmd, abelianize_cmd, center_cmd, h_mul_cmd, h_norm_cmd,
        h_trivial_cmd, h_rel_cmd, h_central_cmd, verify_all_cmd}) {
    sub->add_flag("--json", *as_json, "machine-readable JSON output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    int code = app.exit(error);
    return code == 0 ? kExitSuccess : kExitUsage;
  } catch (const ParseError& error) {
    std::cerr << error.what() << "\n";
    return kExitUsage;
  } catch (const ClosureLimitExceeded& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitVerificationFailure;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
