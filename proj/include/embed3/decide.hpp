#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "complex.hpp"
#include "io.hpp"
#include "rotation.hpp"
#include "space_minor.hpp"
#include "yprime.hpp"

namespace embed3 {

enum class Status { Embeddable, NotEmbeddable, NoOrientedEmbedding, Conditional, Undecided };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Embeddable: return "EMBEDDABLE";
    case Status::NotEmbeddable: return "NOT_EMBEDDABLE";
    case Status::NoOrientedEmbedding: return "NO_ORIENTED_3MANIFOLD_EMBEDDING";
    case Status::Conditional: return "CONDITIONAL";
    case Status::Undecided: return "UNDECIDED";
  }
  return "?";
}

inline int exit_code(Status s) {
  switch (s) {
    case Status::Embeddable: return 0;
    case Status::NotEmbeddable:
    case Status::NoOrientedEmbedding: return 1;
    default: return 2;
  }
}

// ---------------------------------------------------------------------------
// Certificates

enum class CertificateKind { PlanarRotation, Obstruction, LinkWitness, Exhaustive, Undecided };

// Obstruction: trace ending in a member of the obstruction family.
// LinkWitness: trace ending in a complex with a nonplanar or not loop-planar
// link at `argument`. Exhaustive: the oracle saw `candidates` rotation
// systems and none was planar.
struct Certificate {
  CertificateKind kind = CertificateKind::Undecided;
  ComplexRotation rotation;
  std::vector<SpaceMinorOp> ops;
  std::string result;    // zcal1, zcal2, nonplanar-link, not-loop-planar
  std::string argument;  // K5 / K33, catalogue index, or vertex
  double candidates = 0;
  std::string reason;
};

inline std::string serialise(const Certificate& cert) {
  std::ostringstream out;
  switch (cert.kind) {
    case CertificateKind::PlanarRotation:
      out << "rotation\n";
      for (const auto& [e, ps] : cert.rotation) out << format_rotator(e, ps) << "\n";
      break;
    case CertificateKind::Obstruction:
    case CertificateKind::LinkWitness:
      out << "trace\n";
      for (const auto& op : cert.ops) out << "op " << to_string(op) << "\n";
      out << "result " << cert.result << " " << cert.argument << "\n";
      break;
    case CertificateKind::Exhaustive:
      out << "exhaustive " << static_cast<long long>(cert.candidates) << "\n";
      break;
    case CertificateKind::Undecided:
      out << "undecided " << cert.reason << "\n";
      break;
  }
  return out.str();
}

inline Certificate parse_certificate(std::istream& in) {
  Certificate cert;
  std::string line;
  int n = 0;
  bool header = false, done = false;
  while (std::getline(in, line)) {
    ++n;
    auto t = detail::tokens(line);
    if (t.empty()) continue;
    if (done) throw detail::parse_error(n, "text after the end of the certificate");
    if (!header) {
      header = true;
      if (t[0] == "rotation" && t.size() == 1) {
        cert.kind = CertificateKind::PlanarRotation;
      } else if (t[0] == "trace" && t.size() == 1) {
        cert.kind = CertificateKind::Obstruction;
      } else if (t[0] == "exhaustive" && t.size() == 2) {
        cert.kind = CertificateKind::Exhaustive;
        try {
          cert.candidates = std::stod(t[1]);
        } catch (const std::exception&) {
          throw detail::parse_error(n, "bad count '" + t[1] + "'");
        }
        done = true;
      } else if (t[0] == "undecided") {
        cert.kind = CertificateKind::Undecided;
        auto pos = line.find("undecided");
        cert.reason = line.substr(pos + 9);
        cert.reason.erase(0, cert.reason.find_first_not_of(' '));
        done = true;
      } else {
        throw detail::parse_error(n, "unknown certificate kind '" + t[0] + "'");
      }
      continue;
    }
    if (cert.kind == CertificateKind::PlanarRotation) {
      auto [e, ps] = parse_rotator(t, n);
      if (cert.rotation.count(e)) throw detail::parse_error(n, "duplicate rotator for '" + e + "'");
      cert.rotation[e] = ps;
    } else if (t[0] == "op") {
      cert.ops.push_back(parse_op(t, n));
    } else if (t[0] == "result" && t.size() == 3) {
      cert.result = t[1];
      cert.argument = t[2];
      if (t[1] == "nonplanar-link" || t[1] == "not-loop-planar") cert.kind = CertificateKind::LinkWitness;
      else if (t[1] != "zcal1" && t[1] != "zcal2") throw detail::parse_error(n, "unknown result '" + t[1] + "'");
      done = true;
    } else {
      throw detail::parse_error(n, "expected 'op' or 'result'");
    }
  }
  if (!header) throw ParseError("empty certificate");
  if (cert.kind == CertificateKind::Obstruction && cert.result.empty()) throw ParseError("trace without result line");
  return cert;
}

inline Certificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  return parse_certificate(in);
}

// ---------------------------------------------------------------------------
// Decision

// Catalogue index shared by all decisions in a process.
inline YPrimeIndex& shared_index() {
  static const StrictCatalogue cat = build_strict_catalogue();
  static YPrimeIndex index(cat);
  return index;
}

struct DecideOptions {
  bool assume_sc = false;
  std::vector<int> primes{2, 3, 5};
  double budget = 1e6;
};

struct Verdict {
  Status status = Status::Undecided;
  bool simplicial = false;
  LocalConnectivity local3;
  std::map<int, int> h1;
  bool assume_sc = false;
  bool has_rotation = false;
  Certificate certificate;
  std::vector<std::string> notes;
};

namespace detail {

inline Certificate link_witness(const Complex2& c, const SolverFailure& f) {
  Certificate cert;
  cert.kind = CertificateKind::LinkWitness;
  Complex2 cur = c;
  std::string v = f.vertex;
  if (f.kind == FailureKind::Incompatible) {
    cert.ops.push_back({OpKind::ContractEdge, f.edge});
    v = c.ends(f.edge).tail;
  } else if (f.kind == FailureKind::OddCycle) {
    for (const auto& e : f.cycle)
      if (e != f.edge) cert.ops.push_back({OpKind::ContractEdge, e});
  }
  for (const auto& op : cert.ops) cur = apply_op(cur, op);
  if (f.kind == FailureKind::OddCycle) v = cur.ends(f.edge).tail;
  cert.argument = v;
  cert.result = is_planar(link_graph(cur, v).graph) ? "not-loop-planar" : "nonplanar-link";
  return cert;
}

}  // namespace detail

inline Verdict decide(const Complex2& c, const DecideOptions& opt = {}, YPrimeIndex* index = nullptr) {
  auto problems = validate(c);
  if (!problems.empty()) throw ComplexError("invalid complex: " + problems.front());
  for (int p : opt.primes)
    if (!is_prime(p)) throw ComplexError("p = " + std::to_string(p) + " is not prime");
  if (!index) index = &shared_index();
  Verdict out;
  out.assume_sc = opt.assume_sc;
  out.simplicial = is_simplicial(c);
  out.local3 = is_locally_k_connected(c, 3);
  for (int p : opt.primes) out.h1[p] = homology_h1_dim(c, p);

  std::optional<ComplexRotation> sigma;
  std::optional<SolverFailure> failure;
  bool decided = true;
  if (out.local3.ok) {
    auto r = find_planar_rotation_system(c);
    sigma = r.rotation;
    failure = r.failure;
  } else {
    out.notes.push_back("not locally 3-connected at " + out.local3.vertex + ": " + out.local3.defect);
    for (const auto& v : c.vertices)
      if (auto k = kuratowski_witness(link_graph(c, v).graph)) {
        failure = SolverFailure{FailureKind::NonplanarLink, v, "", {}, k, "link graph is not planar"};
        break;
      }
    try {
      if (!failure)
        for (const auto& v : c.vertices) {
          LinkGraph L = link_graph(c, v);
          if (!L.loop_pairs.empty() && !is_loop_planar(L, opt.budget).ok) {
            failure = SolverFailure{FailureKind::LoopNotPlanar, v, "", {}, std::nullopt, "link graph is not loop-planar"};
            break;
          }
        }
      if (!failure) {
        auto b = brute_force_rotation_search(c, opt.budget);
        sigma = b.rotation;
        if (!sigma) {
          out.certificate.kind = CertificateKind::Exhaustive;
          out.certificate.candidates = b.candidates;
        }
      }
    } catch (const BudgetExceeded& e) {
      decided = false;
      out.certificate.kind = CertificateKind::Undecided;
      out.certificate.reason = e.what();
    }
  }

  if (failure) {
    std::string why;
    std::optional<Obstruction> ob;
    try {
      ob = extract_obstruction(c, *failure, *index, &why);
    } catch (const std::exception& e) {
      why = e.what();
    }
    if (ob) {
      Certificate& cert = out.certificate;
      cert.kind = CertificateKind::Obstruction;
      cert.ops = ob->trace.ops;
      cert.result = ob->member.family == 1 ? "zcal1" : "zcal2";
      cert.argument = ob->member.family == 1 ? ob->member.kuratowski : std::to_string(ob->member.base);
    } else {
      out.notes.push_back("no obstruction trace: " + why);
      out.certificate = detail::link_witness(c, *failure);
    }
    out.notes.push_back(std::string("solver: ") + failure_name(failure->kind) + ", " + failure->detail);
  }

  out.has_rotation = sigma.has_value();
  if (sigma) {
    out.certificate.kind = CertificateKind::PlanarRotation;
    out.certificate.rotation = *sigma;
    bool trivial = false, nontrivial = false;
    for (const auto& [p, d] : out.h1) (d == 0 ? trivial : nontrivial) = true;
    if (opt.assume_sc) {
      if (nontrivial) {
        out.status = Status::Undecided;
        out.notes.push_back("nontrivial first homology contradicts the simple connectivity assumption");
      } else {
        out.status = Status::Embeddable;
      }
    } else if (out.simplicial && out.local3.ok && trivial) {
      out.status = Status::Conditional;
      out.notes.push_back("embeds in 3-space if and only if it is simply connected");
    } else {
      out.status = Status::Undecided;
      out.notes.push_back("planar rotation system exists; simple connectivity unknown");
    }
  } else if (decided) {
    out.status = opt.assume_sc ? Status::NotEmbeddable : Status::NoOrientedEmbedding;
  } else {
    out.status = Status::Undecided;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verification

inline bool verify(const Complex2& c, const Certificate& cert, YPrimeIndex* index = nullptr, double budget = 1e6,
                   std::string* why = nullptr) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (!index) index = &shared_index();
  try {
    switch (cert.kind) {
      case CertificateKind::PlanarRotation: {
        std::string d = rotation_defect(c, cert.rotation);
        if (!d.empty()) return fail(d);
        if (auto v = nonplanar_vertex(c, cert.rotation)) return fail("induced rotation at " + *v + " is not planar");
        return true;
      }
      case CertificateKind::Obstruction:
      case CertificateKind::LinkWitness: {
        auto r = replay(c, cert.ops);
        if (!r.ok) return fail("step " + std::to_string(r.failed_step + 1) + ": " + r.error);
        const Complex2& end = r.end;
        if (cert.kind == CertificateKind::LinkWitness) {
          if (!end.vertices.count(cert.argument)) return fail("unknown vertex '" + cert.argument + "'");
          LinkGraph L = link_graph(end, cert.argument);
          if (cert.result == "nonplanar-link") return is_planar(L.graph) ? fail("link graph is planar") : true;
          return is_loop_planar(L, budget).ok ? fail("link graph is loop-planar") : true;
        }
        auto m = is_in_zcal(end, *index);
        if (!m) return fail("end complex is not in the obstruction family");
        if (cert.result == "zcal1" && (m->family != 1 || m->kuratowski != cert.argument))
          return fail("end complex is not a cone over " + cert.argument);
        if (cert.result == "zcal2" && (m->family != 2 || std::to_string(m->base) != cert.argument))
          return fail("end complex does not match catalogue entry " + cert.argument);
        if (rotation_system_count(end) <= budget && brute_force_rotation_search(end, budget).rotation)
          return fail("end complex has a planar rotation system");
        return true;
      }
      case CertificateKind::Exhaustive: {
        auto b = brute_force_rotation_search(c, budget);
        if (b.rotation) return fail("a planar rotation system exists");
        if (b.candidates != cert.candidates) return fail("candidate count differs");
        return true;
      }
      case CertificateKind::Undecided:
        return fail("undecided certificates prove nothing");
    }
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  return fail("unknown certificate");
}

}  // namespace embed3
