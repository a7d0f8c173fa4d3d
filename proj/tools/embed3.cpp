#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "embed3/catalog.hpp"
#include "embed3/corpus.hpp"
#include "embed3/decide.hpp"
#include "embed3/io.hpp"
#include "embed3/yprime.hpp"

using namespace embed3;

namespace {

constexpr int kInputError = 3;

Complex2 read_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_complex(in);
}

Graph read_graph(const std::string& path) {
  // "n" on the first line, then one "u v" pair per line
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  int n = 0;
  if (!(in >> n) || n < 1) throw ParseError("graph file must start with the node count");
  Graph g(n);
  for (int u, v; in >> u >> v;) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("arc endpoint out of range");
    g.add_arc(u, v);
  }
  return g;
}

std::string link_text(const Complex2& c, const std::string& v) {
  LinkGraph L = link_graph(c, v);
  std::ostringstream out;
  out << "link " << v << " nodes " << L.graph.node_count() << " arcs " << L.graph.arc_count()
      << (is_planar(L.graph) ? " planar" : " nonplanar") << (is_k_connected(L.graph, 3) ? " 3-connected" : "") << "\n";
  for (std::size_t x = 0; x < L.nodes.size(); ++x)
    out << "  node " << x << " " << L.nodes[x].edge << "." << end_name(L.nodes[x].end) << "\n";
  for (int a = 0; a < L.graph.arc_count(); ++a)
    out << "  arc " << L.graph.arc(a).u << " " << L.graph.arc(a).v << " " << L.arcs[a].face << "@" << L.arcs[a].corner
        << "\n";
  return out.str();
}

int run_check(const std::string& file, bool sc, const std::vector<int>& primes, double budget, const std::string& cert_out) {
  Complex2 c = read_complex(file);
  DecideOptions opt;
  opt.assume_sc = sc;
  opt.primes = primes;
  opt.budget = budget;
  Verdict v = decide(c, opt);
  std::cout << "status " << status_name(v.status) << "\n";
  std::cout << "simplicial " << (v.simplicial ? "yes" : "no") << "\n";
  std::cout << "locally-3-connected " << (v.local3.ok ? "yes" : "no") << "\n";
  for (const auto& [p, d] : v.h1) std::cout << "h1 F" << p << " " << d << "\n";
  std::cout << "simply-connected " << (sc ? "asserted" : "unknown") << "\n";
  for (const auto& n : v.notes) std::cout << "note " << n << "\n";
  std::string text = serialise(v.certificate);
  if (cert_out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cert_out);
    out << text;
  }
  return exit_code(v.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide embeddability of 2-complexes in 3-space"};
  app.require_subcommand(1);

  std::string file, cert_file, out_file, vertex, script, name, graph_file;
  bool sc = false;
  std::vector<int> primes{2, 3, 5};
  double budget = 1e6;
  int param = -1;

  auto* check = app.add_subcommand("check", "decide a complex");
  check->add_option("FILE", file, "complex file")->required();
  check->add_flag("--assume-simply-connected", sc, "treat the complex as simply connected");
  check->add_option("--primes", primes, "primes for the homology check")->delimiter(',');
  check->add_option("--budget", budget, "rotation systems the oracle may enumerate");
  check->add_option("-c,--certificate", out_file, "write the certificate here instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "check a certificate");
  verify_cmd->add_option("FILE", file, "complex file")->required();
  verify_cmd->add_option("CERT", cert_file, "certificate file")->required();
  verify_cmd->add_option("--budget", budget, "rotation systems the oracle may enumerate");

  auto* links = app.add_subcommand("links", "print link graphs");
  links->add_option("FILE", file, "complex file")->required();
  links->add_option("VERTEX", vertex, "only this vertex");

  auto* corpus_cmd = app.add_subcommand("corpus", "write a built-in complex");
  corpus_cmd->add_option("NAME", name, "tetra, cone, octa, crosscap, bowtie_loop, sc_case2, ...")->required();
  corpus_cmd->add_option("PARAMS", param, "cone: 5 or 33; octa: squares; crosscap: q");
  corpus_cmd->add_option("--graph", graph_file, "cone over the graph in this file");
  corpus_cmd->add_option("-o,--output", out_file, "output file");

  std::string which;
  auto* catalog = app.add_subcommand("catalog", "dump a catalogue");
  catalog->add_option("WHICH", which, "xcal, ycal or ycal-prime")->required()->check(
      CLI::IsMember({"xcal", "ycal", "ycal-prime"}));
  int max_nodes = 6;
  catalog->add_option("--max-nodes", max_nodes, "ycal-prime: largest underlyer");

  auto* minor = app.add_subcommand("minor", "apply space minor operations");
  minor->add_option("FILE", file, "complex file")->required();
  minor->add_option("--script", script, "one operation per line")->required();
  minor->add_option("-o,--output", out_file, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*check) return run_check(file, sc, primes, budget, out_file);

    if (*verify_cmd) {
      Complex2 c = read_complex(file);
      std::ifstream in(cert_file);
      if (!in) throw ParseError("cannot open '" + cert_file + "'");
      Certificate cert = parse_certificate(in);
      std::string why;
      bool ok = verify(c, cert, nullptr, budget, &why);
      std::cout << (ok ? "valid" : "invalid: " + why) << "\n";
      return ok ? 0 : 1;
    }

    if (*links) {
      Complex2 c = read_complex(file);
      if (!vertex.empty()) {
        std::cout << link_text(c, vertex);
      } else {
        for (const auto& v : c.vertices) std::cout << link_text(c, v);
      }
      return 0;
    }

    if (*corpus_cmd) {
      Complex2 c = !graph_file.empty() ? cone_complex(read_graph(graph_file), "cone") : corpus(name, param);
      if (out_file.empty()) {
        write_complex(std::cout, c);
      } else {
        std::ofstream out(out_file);
        write_complex(out, c);
      }
      return 0;
    }

    if (*catalog) {
      if (which == "xcal") {
        auto xs = generate_xcal();
        for (std::size_t i = 0; i < xs.size(); ++i) std::cout << "xcal " << i << " " << format_unlabelled(xs[i]) << "\n";
      } else if (which == "ycal") {
        auto ys = generate_ycal();
        for (std::size_t i = 0; i < ys.size(); ++i) std::cout << "ycal " << i << " " << format_marked(ys[i]) << "\n";
      } else {
        auto slice = ycal_prime_slice(shared_index(), max_nodes);
        for (std::size_t i = 0; i < slice.size(); ++i)
          std::cout << "ycal-prime " << i << " " << format_strict(slice[i]) << "\n";
      }
      return 0;
    }

    if (*minor) {
      Complex2 c = read_complex(file);
      std::ifstream in(script);
      if (!in) throw ParseError("cannot open '" + script + "'");
      auto r = replay(c, parse_op_script(in));
      if (!r.ok) {
        std::cerr << "step " << r.failed_step + 1 << ": " << r.error << "\n";
        return kInputError;
      }
      if (out_file.empty()) {
        write_complex(std::cout, r.end);
      } else {
        std::ofstream out(out_file);
        write_complex(out, r.end);
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ComplexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
