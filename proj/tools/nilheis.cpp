// nilheis: decompose finite class-2 nilpotent groups and certify their
// embeddings into Heisenberg groups. JSON in, JSON out.
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilheis/abelian.hpp"
#include "nilheis/corpus.hpp"
#include "nilheis/decompose.hpp"
#include "nilheis/embed.hpp"
#include "nilheis/json_io.hpp"
#include "nilheis/verify.hpp"

using nlohmann::json;
using namespace nilheis;

namespace {

// exit-code contract: 0 ok, 1 verify-fail, 2 parse, 3 not-a-group,
// 4 precondition, 5 budget
int code_for(const Error& e) {
  std::string c = e.code();
  if (c == "ParseError") return 2;
  if (c == "NotAGroup") return 3;
  if (c == "TooLarge" || c == "TooLargeToVerify") return 5;
  return 4;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_analyze(const std::string& path) {
  auto pg = load_group_file(path);
  const auto& g = pg.group;
  json report;
  report["label"] = pg.label;
  report["order"] = g->order();
  report["exponent"] = exponent(*g);
  auto z = centre(g);
  auto zp = abelian_invariants(z);
  report["centre"] = zp.factors;
  report["centre_order"] = z.size();
  report["d_centre"] = zp.d();
  auto der = derived_subgroup(g);
  report["derived"] = abelian_invariants(der).factors;
  report["derived_order"] = der.size();

  bool ok = true;
  auto cls = nilpotency_class_le2(g);
  if (!is_nilpotent(*g)) {
    report["class"] = "not-nilpotent";
    ok = false;
  } else if (!cls) {
    report["class"] = ">=3";
    ok = false;
  } else {
    report["class"] = *cls;
    report["d"] = d_nilpotent(g);
    report["quotient_by_centre"] = abelian_invariants_group(quotient(g, z).group).factors;
  }
  emit(report);
  return ok ? 0 : 4;
}

json members_of(const SubgroupHandle& h) { return json(h.members); }

int cmd_decompose(const std::string& path, const std::string& mode) {
  auto pg = load_group_file(path);
  json out;
  out["label"] = pg.label;
  out["mode"] = mode;
  if (mode == "subdirect") {
    auto dec = c_decomposition_min(pg.group);
    json kernels = json::array(), centres = json::array();
    for (auto& n : dec.kernels) {
      kernels.push_back(members_of(n));
      centres.push_back(abelian_invariants(centre(quotient(pg.group, n).group)).factors);
    }
    out["kernels"] = kernels;
    out["quotient_centres"] = centres;
  } else {
    auto cpd = central_product_decomposition(pg.group);
    out["t"] = cpd.t;
    out["abelian_part"] = members_of(cpd.abelian_part);
    json factors = json::array(), chain = json::array();
    for (auto& e : cpd.factors) factors.push_back(members_of(e));
    for (auto& d : cpd.derived_chain) chain.push_back(members_of(d));
    out["factors"] = factors;
    out["derived_chain"] = chain;
  }
  emit(out);
  return 0;
}

int cmd_embed(const std::string& path, const std::string& out_path, bool partial_ok) {
  auto pg = load_group_file(path);
  auto cert = embed_general(pg.group, partial_ok);
  auto j = certificate_to_json(cert);
  j["source"] = {{"label", pg.label}, {"order", pg.group->order()}, {"file", path}};
  if (out_path.empty()) {
    emit(j);
  } else {
    std::ofstream out(out_path);
    require(out.good(), "IOError", "cannot write " + out_path);
    out << j.dump(2) << "\n";
    emit(json{{"certificate", out_path},
              {"order_h", cert.h.order},
              {"mode", cert.checks.mode}});
  }
  return 0;
}

int cmd_verify(const std::string& group_path, const std::string& cert_path) {
  auto pg = load_group_file(group_path);
  std::ifstream in(cert_path);
  require(in.good(), "ParseError", "cannot open " + cert_path);
  json cert;
  try {
    in >> cert;
  } catch (const json::exception& e) {
    fail("ParseError", std::string("invalid certificate JSON: ") + e.what());
  }
  auto res = verify_certificate(pg.group, cert);
  if (res.ok) {
    emit(json{{"ok", true}});
    return 0;
  }
  emit(json{{"ok", false}, {"failed", res.failed}, {"witness", res.witness}});
  return 1;
}

int cmd_corpus(const std::string& dir) {
  write_corpus(dir);
  json names = json::array();
  for (const auto& e : corpus()) names.push_back(e.name);
  emit(json{{"out", dir}, {"count", names.size()}, {"groups", names}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decomposition and Heisenberg embedding of finite class-2 nilpotent groups"};
  app.require_subcommand(1);

  std::string path, cert_path, out_path, mode = "subdirect", dir;
  bool partial_ok = false;

  auto* analyze = app.add_subcommand("analyze", "structural report for a group file");
  analyze->add_option("file", path, "group file (cayley/heisenberg/hsub JSON)")->required();

  auto* decompose = app.add_subcommand("decompose", "subdirect or central product decomposition");
  decompose->add_option("file", path)->required();
  decompose->add_option("--mode", mode, "subdirect | central")
      ->check(CLI::IsMember({"subdirect", "central"}));

  auto* embed = app.add_subcommand("embed", "produce an embedding certificate");
  embed->add_option("file", path)->required();
  embed->add_option("-o,--out", out_path, "certificate output file");
  embed->add_flag("--partial-ok", partial_ok, "accept coordinate-level verification for large H");

  auto* verify = app.add_subcommand("verify", "re-check a certificate from scratch");
  verify->add_option("file", path)->required();
  verify->add_option("cert", cert_path)->required();

  auto* corpus_cmd = app.add_subcommand("corpus", "write the standard test corpus");
  corpus_cmd->add_option("--out", dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return cmd_analyze(path);
    if (*decompose) return cmd_decompose(path, mode);
    if (*embed) return cmd_embed(path, out_path, partial_ok);
    if (*verify) return cmd_verify(path, cert_path);
    if (*corpus_cmd) return cmd_corpus(dir);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
