#include "fortdesign/commands.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "fortdesign/concrete.hpp"
#include "fortdesign/finitebrute.hpp"
#include "fortdesign/query.hpp"

namespace fortdesign::cli {

namespace {

std::vector<concrete::ConcreteSet> default_probes(const SubsetDescriptor& c, DesignType type) {
  std::vector<concrete::ConcreteSet> out;
  try {
    out.push_back(concrete::canonical_representative(c));
  } catch (const std::invalid_argument&) {
    return out;
  }
  // A finite copy of C on the other side of b counts for types 1 and 2.
  if (c.is_finite() && !requires_probe_complement(type)) {
    SubsetDescriptor flipped = c;
    flipped.contains_b = !c.contains_b;
    out.push_back(concrete::canonical_representative(flipped));
  }
  return out;
}

void print_verify_record(const Verdict& verdict, const FamilyDescriptor& family,
                         const concrete::DesignCheckReport& report, std::uint64_t cutoff,
                         std::ostream& out) {
  out << "exists: " << (verdict.is_exists() ? "true" : "false") << '\n';
  out << "case_tag: " << to_string(verdict.case_tag()) << '\n';
  out << "family: " << to_string(family) << '\n';
  out << "cutoff: " << cutoff << '\n';
  out << "blocks_checked: " << report.blocks.size() << '\n';
  out << "blocks_ok: " << (report.blocks_ok ? "true" : "false") << '\n';
  for (const auto& b : report.blocks) {
    if (b.homeomorphic && b.complement_homeomorphic) continue;
    out << "block: " << concrete::to_string(b.block)
        << " homeomorphic=" << (b.homeomorphic ? "true" : "false")
        << " complement_homeomorphic=" << (b.complement_homeomorphic ? "true" : "false") << '\n';
  }
  for (const auto& p : report.probes) {
    out << "probe: " << concrete::to_string(p.probe);
    if (!p.accepted) {
      out << " rejected=" << p.rejection << '\n';
      continue;
    }
    out << " count=" << concrete::to_string(p.count);
    if (p.count.excluded) out << " excluded=" << *p.count.excluded;
    out << '\n';
  }
  for (std::size_t i : report.lambda_mismatches) {
    out << "lambda_mismatch: " << concrete::to_string(report.probes[i].probe)
        << " count=" << concrete::to_string(report.probes[i].count)
        << " expected=" << to_string(verdict.lambda()) << '\n';
  }
  out << "refutation: ";
  if (report.refutation) {
    const auto& a = report.probes[report.refutation->first];
    const auto& b = report.probes[report.refutation->second];
    out << concrete::to_string(a.probe) << ' ' << concrete::to_string(a.count) << " vs "
        << concrete::to_string(b.probe) << ' ' << concrete::to_string(b.count);
  } else {
    out << "none";
  }
  out << '\n';
  out << "consistent: " << (report.consistent() ? "true" : "false") << '\n';
}

void print_verify_text(const Verdict& verdict, const FamilyDescriptor& family,
                       const concrete::DesignCheckReport& report, std::uint64_t cutoff,
                       std::ostream& out) {
  out << "decision: " << to_text(verdict);
  out << "checked " << report.blocks.size() << " blocks of " << to_string(family)
      << (report.blocks_ok ? ", all homeomorphic to D as required" : ", some blocks fail")
      << '\n';
  for (const auto& p : report.probes) {
    out << "  " << concrete::to_string(p.probe) << ": ";
    if (!p.accepted) {
      out << "rejected (" << p.rejection << ")\n";
    } else {
      out << "in " << concrete::to_string(p.count) << " blocks (cutoff " << cutoff << ")\n";
    }
  }
  if (report.refutation) {
    out << "no uniform lambda: "
        << concrete::to_string(report.probes[report.refutation->first].probe) << " and "
        << concrete::to_string(report.probes[report.refutation->second].probe)
        << " lie in different numbers of blocks\n";
  } else if (report.consistent()) {
    out << "consistent up to the cutoff\n";
  } else {
    out << "inconsistent with the stated lambda\n";
  }
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "record") return OutputFormat::kRecord;
  throw std::invalid_argument("unknown format '" + name + "' (expected text or record)");
}

int cmd_decide(std::istream& query, OutputFormat format, std::ostream& out, std::ostream& err) {
  try {
    const Query q = parse_query(query);
    const Verdict v = decide(q.type, q.c, q.d, q.x);
    out << (format == OutputFormat::kRecord ? to_record(v) : to_text(v));
    return v.is_exists() ? kExitOk : kExitNegative;
  } catch (const QueryError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

int cmd_verify(std::istream& query, const VerifyOptions& options, std::ostream& out,
               std::ostream& err) {
  try {
    const Query q = parse_query(query);
    if (q.x.size() != kAleph0) {
      err << "error: verify runs on the countable model; space.size must be aleph0\n";
      return kExitInputError;
    }
    if (options.cutoff == 0) {
      err << "error: --cutoff must be positive\n";
      return kExitInputError;
    }
    const Verdict verdict = decide(q.type, q.c, q.d, q.x);
    std::optional<FamilyDescriptor> family;
    std::optional<LambdaValue> lambda;
    if (verdict.is_exists()) {
      family = verdict.witness();
      lambda = verdict.lambda();
    } else if (options.refutation_demo) {
      family = ClassW{q.d};
    } else {
      out << (options.format == OutputFormat::kRecord ? to_record(verdict) : to_text(verdict));
      return kExitNegative;
    }
    if (!concrete::is_enumerable(*family)) {
      err << "error: witness " << to_string(*family)
          << " cannot be enumerated on the countable model\n";
      return kExitInputError;
    }

    std::vector<concrete::ConcreteSet> probes;
    for (const auto& text : options.probes) {
      probes.push_back(concrete::parse_concrete_set(text));
    }
    if (probes.empty()) probes = default_probes(q.c, q.type);
    if (probes.empty()) {
      err << "error: C has no finite or cofinite copy; supply probes explicitly\n";
      return kExitInputError;
    }

    const auto report =
        concrete::local_design_check(*family, q.type, q.c, q.d, probes, options.cutoff, lambda);
    if (options.format == OutputFormat::kRecord) {
      print_verify_record(verdict, *family, report, options.cutoff, out);
    } else {
      print_verify_text(verdict, *family, report, options.cutoff, out);
    }
    if (report.has_rejected_probe()) {
      err << "error: some probes are not copies of C counted by this design type\n";
      return kExitInputError;
    }
    return report.consistent() ? kExitOk : kExitNegative;
  } catch (const QueryError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

int cmd_crosscheck(const SweepOptions& options, OutputFormat format, std::ostream& out,
                   std::ostream& /*err*/) {
  const SweepSummary s = sweep_grid(options);
  if (format == OutputFormat::kRecord) {
    out << "cases: " << s.cases << '\n'
        << "equivalence_violations: " << s.equivalence_violations << '\n'
        << "monotonicity_violations: " << s.monotonicity_violations << '\n'
        << "cardinality_violations: " << s.cardinality_violations << '\n'
        << "witness_violations: " << s.witness_violations << '\n';
  }
  for (const auto& v : s.examples) {
    out << "violation: X=" << to_string(v.x.size()) << " C=" << to_record(v.c)
        << " D=" << to_record(v.d) << " " << v.what << '\n';
  }
  out << (format == OutputFormat::kRecord ? "summary: " : "") << s.total_violations()
      << " violations / " << s.cases << " cases\n";
  return s.total_violations() == 0 ? kExitOk : kExitNegative;
}

int cmd_brute(std::istream& instance, const BruteOptions& options, std::ostream& out,
              std::ostream& err) {
  try {
    auto inst = finitebrute::parse_instance(instance);
    if (options.t) inst.c_size = *options.t;
    if (const auto problems = finitebrute::validate(inst); !problems.empty()) {
      err << "error: " << problems.front() << '\n';
      return kExitInputError;
    }
    const DesignType type = design_type_from_int(options.type);
    const auto result = finitebrute::brute_lambda(inst, type);
    if (options.format == OutputFormat::kRecord) {
      out << "n: " << inst.n << "\nt: " << inst.c_size << "\nk: " << inst.d_size
          << "\ntype: " << options.type << "\nresult: ";
    }
    out << finitebrute::to_string(result, inst) << '\n';
    const auto* uniform = std::get_if<finitebrute::Uniform>(&result);
    return uniform && uniform->lambda > 0 ? kExitOk : kExitNegative;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace fortdesign::cli
