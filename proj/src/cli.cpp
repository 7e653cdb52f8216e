#include "typerank/cli.hpp"

#include "typerank/canonical.hpp"
#include "typerank/derivation.hpp"
#include "typerank/synthesis.hpp"
#include "typerank/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace typerank {

namespace {

using nlohmann::json;

// Error carrying the exit code it maps to.
struct CliFailure {
  int code;
  std::string message;
};

struct Outcome {
  int code = kExitOk;
  json doc;
  std::ostringstream text;
};

json empty_doc(const std::string& command, const std::vector<std::string>& inputs) {
  return json{{"command", command},   {"inputs", inputs},   {"rank_source", nullptr}, {"rank_target", nullptr},
              {"relation", nullptr},  {"derivation", nullptr}, {"encoder", nullptr}, {"decoder", nullptr},
              {"verified", nullptr},  {"report", nullptr}};
}

Type type_arg(const char* label, const std::string& text) {
  try {
    return parse_type(text);
  } catch (const ParseError& e) {
    throw CliFailure{kExitUsage, std::string("argument ") + label + ": " + e.what()};
  }
}

Ordinal ordinal_arg(const char* label, const std::string& text) {
  try {
    return parse_ordinal(text);
  } catch (const ParseError& e) {
    throw CliFailure{kExitUsage, std::string("argument ") + label + ": " + e.what()};
  }
}

Term term_file(const char* label, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliFailure{kExitUsage, std::string("argument ") + label + ": cannot read '" + path + "'"};
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_term(buffer.str());
  } catch (const ParseError& e) {
    throw CliFailure{kExitUsage, std::string("argument ") + label + " (" + path + "): " + e.what()};
  }
}

const char* relation_symbol(Order o) {
  switch (o) {
    case Order::Less:
      return "<";
    case Order::Equal:
      return "~";
    case Order::Greater:
      break;
  }
  return ">";
}

void print_tree(const LeDerivation& d, std::size_t indent, std::ostream& os) {
  os << std::string(indent, ' ') << clause_name(d.clause()) << ' ' << print_ordinal(d.lhs())
     << " <= " << print_ordinal(d.rhs()) << '\n';
  for (const auto& c : d.children()) print_tree(c, indent + 2, os);
}

json derivation_json(const LeDerivation& d) {
  json children = json::array();
  for (const auto& c : d.children()) children.push_back(derivation_json(c));
  return {{"clause", clause_name(d.clause())},
          {"lhs", print_ordinal(d.lhs())},
          {"rhs", print_ordinal(d.rhs())},
          {"children", children}};
}

void report_text(const VerifyReport& report, std::ostream& os) {
  os << "semantic: " << report.semantic_samples << " samples, " << report.semantic_failures.size()
     << " failures (seed " << report.seed << ")\n";
  for (const auto& f : report.semantic_failures) {
    os << "failure: inhabitant " << print_term(f.inhabitant);
    if (!f.observation.empty()) os << " observed via";
    for (const auto& s : f.observation) {
      switch (s.kind) {
        case ObservationStep::Kind::Apply:
          os << " [" << print_term(*s.argument) << "]";
          break;
        case ObservationStep::Kind::First:
          os << " fst";
          break;
        case ObservationStep::Kind::Second:
          os << " snd";
          break;
      }
    }
    os << ": expected " << f.expected.str() << ", got " << f.got.str() << '\n';
  }
}

bool passed(const VerifyReport& report) { return report.symbolic_ok && report.semantic_failures.empty(); }

void cmd_rank(const std::string& a, Outcome& o) {
  Ordinal r = rank(type_arg("T", a));
  o.doc["rank_source"] = print_ordinal(r);
  o.text << print_ordinal(r) << '\n';
}

void cmd_canon(const std::string& a, bool witness, Outcome& o) {
  Type t = type_arg("T", a);
  CanonicalType c = canonicalize(t);
  o.doc["canonical"] = print_type(c.type());
  o.doc["rank_source"] = print_ordinal(rank(t));
  o.text << print_type(c.type()) << '\n';
  if (witness) {
    IsoWitness w = iso_witness(t, c.type());
    o.doc["encoder"] = print_term(w.fwd);
    o.doc["decoder"] = print_term(w.bwd);
    o.text << "fwd: " << print_term(w.fwd) << '\n' << "bwd: " << print_term(w.bwd) << '\n';
  }
}

void cmd_compare(const std::string& a, const std::string& b, Outcome& o) {
  Ordinal ra = rank(type_arg("A", a)), rb = rank(type_arg("B", b));
  const char* rel = relation_symbol(compare_ordinals(ra, rb));
  o.doc["rank_source"] = print_ordinal(ra);
  o.doc["rank_target"] = print_ordinal(rb);
  o.doc["relation"] = rel;
  o.text << "A " << rel << " B\n"
         << "rank A = " << print_ordinal(ra) << '\n'
         << "rank B = " << print_ordinal(rb) << '\n';
}

void cmd_derive(const std::string& a, const std::string& b, Outcome& o) {
  Ordinal lo = ordinal_arg("a", a), hi = ordinal_arg("b", b);
  o.doc["rank_source"] = print_ordinal(lo);
  o.doc["rank_target"] = print_ordinal(hi);
  if (hi < lo) {
    o.doc["relation"] = ">";
    throw CliFailure{kExitRefused, "no derivation: " + print_ordinal(lo) + " > " + print_ordinal(hi)};
  }
  LeDerivation d = derive_le(lo, hi);
  o.doc["relation"] = "<=";
  o.doc["derivation"] = derivation_json(d);
  print_tree(d, 0, o.text);
}

void cmd_retract(const std::string& a, const std::string& b, bool verify, std::size_t samples, std::uint64_t seed,
                 Outcome& o) {
  Type s = type_arg("A", a), t = type_arg("B", b);
  Ordinal rs = rank(s), rt = rank(t);
  const char* rel = relation_symbol(compare_ordinals(rs, rt));
  o.doc["rank_source"] = print_ordinal(rs);
  o.doc["rank_target"] = print_ordinal(rt);
  o.doc["relation"] = rel;
  if (rt < rs) {
    throw CliFailure{kExitRefused, "no retraction of A into B exists: rank " + print_ordinal(rs) + " > " +
                                       print_ordinal(rt)};
  }
  Retraction r = synth_retraction(s, t, SynthOptions{false});
  LeDerivation d = derive_le(rs, rt);
  o.doc["derivation"] = derivation_json(d);
  o.doc["encoder"] = print_term(r.enc);
  o.doc["decoder"] = print_term(r.dec);
  o.text << "rank: " << print_ordinal(rs) << ' ' << rel << ' ' << print_ordinal(rt) << '\n' << "derivation:\n";
  print_tree(d, 2, o.text);
  o.text << "encoder: " << print_term(r.enc) << '\n' << "decoder: " << print_term(r.dec) << '\n';
  if (!verify) {
    o.text << "verified: skipped\n";
    return;
  }
  VerifyReport report = verify_semantic(r, samples, seed);
  bool ok = passed(report);
  o.doc["verified"] = ok;
  o.doc["report"] = to_json(report);
  o.text << "verified: " << (ok ? "true" : "false") << '\n';
  report_text(report, o.text);
  if (!ok) throw CliFailure{kExitVerifyFailed, "synthesized retraction failed verification"};
}

void cmd_iso(const std::string& a, const std::string& b, Outcome& o) {
  Type s = type_arg("A", a), t = type_arg("B", b);
  Ordinal rs = rank(s), rt = rank(t);
  o.doc["rank_source"] = print_ordinal(rs);
  o.doc["rank_target"] = print_ordinal(rt);
  o.doc["relation"] = relation_symbol(compare_ordinals(rs, rt));
  if (!trivially_isomorphic(s, t)) {
    throw CliFailure{kExitRefused, "A and B are not trivially isomorphic: ranks " + print_ordinal(rs) + " and " +
                                       print_ordinal(rt)};
  }
  IsoWitness w = iso_witness(s, t);
  o.doc["encoder"] = print_term(w.fwd);
  o.doc["decoder"] = print_term(w.bwd);
  o.text << "rank: " << print_ordinal(rs) << " ~ " << print_ordinal(rt) << '\n'
         << "fwd: " << print_term(w.fwd) << '\n'
         << "bwd: " << print_term(w.bwd) << '\n';
}

void cmd_verify(const std::string& a, const std::string& b, const std::string& enc_path,
                const std::string& dec_path, std::size_t samples, std::uint64_t seed, Outcome& o) {
  Type s = type_arg("A", a), t = type_arg("B", b);
  Term enc = term_file("ENC", enc_path), dec = term_file("DEC", dec_path);
  Ordinal rs = rank(s), rt = rank(t);
  o.doc["rank_source"] = print_ordinal(rs);
  o.doc["rank_target"] = print_ordinal(rt);
  o.doc["relation"] = relation_symbol(compare_ordinals(rs, rt));
  o.doc["encoder"] = print_term(enc);
  o.doc["decoder"] = print_term(dec);

  auto well_typed = [](const Term& term, const Type& expected, std::string& why) {
    try {
      Type actual = typecheck(term);
      if (actual == expected) return true;
      why = "has type " + print_type(actual) + ", expected " + print_type(expected);
    } catch (const TypeError& e) {
      why = e.what();
    }
    return false;
  };
  std::string why;
  Retraction r{s, t, enc, dec, Composite{}};
  VerifyReport report;
  report.seed = seed;
  if (!well_typed(enc, Type::arrow(s, t), why) || !well_typed(dec, Type::arrow(t, s), why)) {
    o.text << "typecheck: " << why << '\n';
  } else {
    report = verify_semantic(r, samples, seed);
  }
  bool ok = passed(report);
  o.doc["verified"] = ok;
  o.doc["report"] = to_json(report);
  o.text << "symbolic: " << (report.symbolic_ok ? "true" : "false") << '\n';
  report_text(report, o.text);
  o.text << "verified: " << (ok ? "true" : "false") << '\n';
  if (!ok) throw CliFailure{kExitVerifyFailed, "verification failed"};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decides the encodability order on simple types over N and synthesizes retractions."};
  app.name("typerank");
  app.require_subcommand(1);
  app.fallthrough();

  bool json_mode = false;
  app.add_flag("--json", json_mode, "Print a single JSON object");

  std::string a, b, enc_path, dec_path;
  bool witness = false, no_verify = false;
  std::size_t samples = 100;
  std::uint64_t seed = 0;

  auto* rank_cmd = app.add_subcommand("rank", "Print the rank of a type in Cantor normal form");
  rank_cmd->add_option("T", a, "Type")->required();

  auto* canon_cmd = app.add_subcommand("canon", "Print the canonical type");
  canon_cmd->add_option("T", a, "Type")->required();
  canon_cmd->add_flag("--witness", witness, "Also print the isomorphism terms");

  auto* compare_cmd = app.add_subcommand("compare", "Compare two types in the encodability order");
  compare_cmd->add_option("A", a, "Type")->required();
  compare_cmd->add_option("B", b, "Type")->required();

  auto* derive_cmd = app.add_subcommand("derive", "Print a derivation of a <= b");
  derive_cmd->add_option("a", a, "Ordinal")->required();
  derive_cmd->add_option("b", b, "Ordinal")->required();

  auto* retract_cmd = app.add_subcommand("retract", "Synthesize a retraction A <| B");
  retract_cmd->add_option("A", a, "Source type")->required();
  retract_cmd->add_option("B", b, "Target type")->required();
  retract_cmd->add_flag("--no-verify", no_verify, "Skip verification");

  auto* iso_cmd = app.add_subcommand("iso", "Print the trivial isomorphism between A and B");
  iso_cmd->add_option("A", a, "Type")->required();
  iso_cmd->add_option("B", b, "Type")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check encoder/decoder terms read from files");
  verify_cmd->add_option("A", a, "Source type")->required();
  verify_cmd->add_option("B", b, "Target type")->required();
  verify_cmd->add_option("ENC", enc_path, "File holding the encoder term")->required();
  verify_cmd->add_option("DEC", dec_path, "File holding the decoder term")->required();

  for (auto* cmd : {retract_cmd, verify_cmd}) {
    cmd->add_option("--samples", samples, "Semantic samples")->capture_default_str();
    cmd->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  }

  std::vector<const char*> argv{"typerank"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run 'typerank --help' for usage\n";
    return kExitUsage;
  }

  std::vector<std::string> inputs;
  CLI::App* chosen = app.get_subcommands().front();
  for (const std::string* s : {&a, &b, &enc_path, &dec_path}) {
    if (!s->empty()) inputs.push_back(*s);
  }
  Outcome o;
  o.doc = empty_doc(chosen->get_name(), inputs);
  try {
    if (chosen == rank_cmd) {
      cmd_rank(a, o);
    } else if (chosen == canon_cmd) {
      cmd_canon(a, witness, o);
    } else if (chosen == compare_cmd) {
      cmd_compare(a, b, o);
    } else if (chosen == derive_cmd) {
      cmd_derive(a, b, o);
    } else if (chosen == retract_cmd) {
      cmd_retract(a, b, !no_verify, samples, seed, o);
    } else if (chosen == iso_cmd) {
      cmd_iso(a, b, o);
    } else {
      cmd_verify(a, b, enc_path, dec_path, samples, seed, o);
    }
  } catch (const CliFailure& f) {
    o.code = f.code;
    o.doc["error"] = f.message;
    err << "error: " << f.message << '\n';
  }

  if (json_mode) {
    out << o.doc.dump(2) << '\n';
  } else {
    out << o.text.str();
  }
  return o.code;
}

}  // namespace typerank
