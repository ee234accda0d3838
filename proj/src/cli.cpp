#include "dgalab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include "dgalab/accept.hpp"
#include "dgalab/gallery.hpp"
#include "dgalab/growth.hpp"
#include "dgalab/io.hpp"
#include "dgalab/koszul.hpp"
#include "dgalab/mf.hpp"
#include "dgalab/resolution.hpp"
#include "dgalab/dvr.hpp"

namespace dgalab {
namespace {

bool color_enabled() {
  const char* v = std::getenv("DGALAB_COLOR");
  return v == nullptr || std::string(v) != "0";
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

unsigned parse_uint(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    unsigned long v = std::stoul(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw InputError("bad " + what + " \"" + s + "\": expected a nonnegative integer");
  }
}

// k | m | A | corpus:<i> — the seeded corpus skips its three standard heads.
Module::Ptr select_module(const Algebra::Ptr& a, const std::string& sel, std::uint64_t seed) {
  if (sel == "k") return a->residue_module();
  if (sel == "m") return a->maximal_ideal_module();
  if (sel == "A") return a->regular_module();
  if (sel.rfind("corpus:", 0) == 0) {
    unsigned idx = parse_uint(sel.substr(7), "corpus index");
    auto mods = corpus(a, seed, idx + 1);
    return mods.at(3 + idx);
  }
  throw InputError("unknown module selector \"" + sel + "\" (use k, m, A, or corpus:<i>)");
}

void emit_object(const Json& j, const std::string& format, std::ostream& out) {
  if (format == "tsv") {
    for (auto it = j.begin(); it != j.end(); ++it) {
      out << it.key() << '\t'
          << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
    }
  } else {
    out << j.dump() << '\n';
  }
}

void emit_array(const Json& j, const std::string& format, std::ostream& out) {
  if (format == "tsv") {
    bool first = true;
    for (const auto& v : j) {
      if (!first) out << '\t';
      first = false;
      out << (v.is_string() ? v.get<std::string>() : v.dump());
    }
    out << '\n';
  } else {
    out << j.dump() << '\n';
  }
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

Json matrix_json(const DenseMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

Json vec_json(const Vec& v) {
  Json row = Json::array();
  for (const auto& x : v) row.push_back(x.str());
  return row;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::POWER_OF_M: return "power_of_m";
    case Family::POWER_OF_REGSEQ: return "power_of_regseq";
    case Family::TRIVIAL_EXT: return "trivial_ext";
    case Family::CODIM3_CLASS: return "codim3";
    case Family::DETERMINANTAL_AVATAR: return "determinantal";
    case Family::HYPERSURFACE: return "hypersurface";
  }
  return "?";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact homological calculator for finite local algebras"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "json";
  std::string module_sel = "k";
  std::string target_sel;  // per-verb default resolved at dispatch
  unsigned range = 0;
  std::uint64_t seed = 1;
  unsigned max_steps = 0;
  unsigned arg_n = 0;
  std::string arg_exponents;
  std::vector<std::string> gallery_args;

  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", format, "output format: json | tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
  };
  auto add_input = [&](CLI::App* s) {
    s->add_option("--input", input, "JSON spec file")->required();
  };
  auto add_range = [&](CLI::App* s, const char* doc) { s->add_option("--range", range, doc); };
  auto add_seed = [&](CLI::App* s) {
    s->add_option("--seed", seed, "seed for corpus module selectors (default 1)");
  };
  auto add_module = [&](CLI::App* s) {
    s->add_option("--module", module_sel, "module: k | m | A | corpus:<i> (default k)");
  };
  auto add_max_steps = [&](CLI::App* s) {
    s->add_option("--max-steps", max_steps,
                  "raise the requested depth past --range; beyond the tested cap "
                  "this prints a warning and unlocks the deep-resolution path");
  };

  CLI::App* c_ring = app.add_subcommand("ring", "summarize a ring spec");
  add_input(c_ring);
  add_format(c_ring);

  CLI::App* c_resolve = app.add_subcommand("resolve", "minimal free resolution prefix");
  add_input(c_resolve);
  add_range(c_resolve, "resolution steps (default 12)");
  add_module(c_resolve);
  add_seed(c_resolve);
  add_max_steps(c_resolve);
  add_format(c_resolve);

  CLI::App* c_betti = app.add_subcommand("betti", "Betti numbers beta_0..beta_N");
  add_input(c_betti);
  add_range(c_betti, "last index N (default 12)");
  add_module(c_betti);
  add_seed(c_betti);
  add_max_steps(c_betti);
  add_format(c_betti);

  CLI::App* c_bass = app.add_subcommand("bass", "Bass numbers mu_0..mu_N");
  add_input(c_bass);
  add_range(c_bass, "last index N (default 12)");
  add_module(c_bass);
  add_seed(c_bass);
  add_max_steps(c_bass);
  add_format(c_bass);

  CLI::App* c_ext = app.add_subcommand("ext", "dim Ext^i(M, T) for i = 0..N");
  add_input(c_ext);
  add_range(c_ext, "last index N (default 12)");
  add_module(c_ext);
  c_ext->add_option("--target", target_sel, "target module T (default A)");
  add_seed(c_ext);
  add_max_steps(c_ext);
  add_format(c_ext);

  CLI::App* c_tor = app.add_subcommand("tor", "dim Tor_i(M, T) for i = 0..N");
  add_input(c_tor);
  add_range(c_tor, "last index N (default 12)");
  add_module(c_tor);
  c_tor->add_option("--target", target_sel, "target module T (default k)");
  add_seed(c_tor);
  add_max_steps(c_tor);
  add_format(c_tor);

  CLI::App* c_dagger =
      app.add_subcommand("dagger", "socle split pair of a graded algebra spec");
  add_input(c_dagger);
  add_format(c_dagger);

  CLI::App* c_classify =
      app.add_subcommand("classify", "multiplication class of a graded algebra spec");
  add_input(c_classify);
  add_format(c_classify);

  CLI::App* c_golod = app.add_subcommand("golod", "Golod test and series coefficients");
  add_input(c_golod);
  add_range(c_golod, "last series index (default 12)");
  add_format(c_golod);

  CLI::App* c_mf = app.add_subcommand("mf", "validate a matrix factorization spec");
  add_input(c_mf);
  add_format(c_mf);

  CLI::App* c_rigidity =
      app.add_subcommand("rigidity", "Tor/Ext vanishing scan over k[x]/(x^n)");
  c_rigidity->add_option("n", arg_n, "power of the defining equation")->required();
  add_range(c_rigidity, "last index N (default 12, cap 20)");
  add_format(c_rigidity);

  CLI::App* c_witness =
      app.add_subcommand("witness", "residue-field splitting witness over Q/(pi^n)");
  c_witness->add_option("n", arg_n, "relation exponent")->required();
  c_witness
      ->add_option("exponents", arg_exponents,
                   "comma-separated summand exponents, each in (0, n)")
      ->required();
  add_range(c_witness, "truncation bound (default 2n, must be >= 2n)");
  add_format(c_witness);

  CLI::App* c_growth = app.add_subcommand("growth", "doubling/growth report for a sequence");
  add_input(c_growth);
  add_format(c_growth);

  CLI::App* c_gallery = app.add_subcommand("gallery", "list built-in examples or emit a spec");
  c_gallery->add_option("args", gallery_args, "list | emit <family> <params...>");
  add_format(c_gallery);

  CLI::App* c_accept = app.add_subcommand("accept", "run the acceptance suite");
  add_format(c_accept);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);  // --help / --version
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string verb = sub->get_name();
  auto opt_count = [&](const char* name) -> std::size_t {
    const CLI::Option* o = sub->get_option_no_throw(name);
    return o ? o->count() : std::size_t{0};
  };

  // effective depth: --range, then --max-steps on top; past the tested cap we
  // warn and unlock allow_deep for the verbs that resolve directly
  auto depth = [&](bool* deep) -> unsigned {
    unsigned n = opt_count("--range") ? range : 12u;
    if (opt_count("--max-steps")) {
      if (max_steps > kResolveCap) {
        err << "warning: depth " << max_steps
            << " is unsupported beyond tested range (cap " << kResolveCap << ")\n";
        if (deep) *deep = true;
      }
      n = std::max(n, max_steps);
    }
    return n;
  };

  try {
    if (verb == "ring") {
      auto a = ring_from_json(load_json_file(input));
      unsigned nil = 1;
      while (a->m_power(nil).dim() > 0) ++nil;
      Json j;
      j["field"] = a->field().str();
      j["dim"] = a->dim();
      j["embedding_dim"] = a->embedding_dim();
      j["socle_dim"] = a->socle().dim();
      j["nilpotency"] = nil;
      j["golod"] = golod_multiplication(a);
      j["dagger"] = socle_split_pair(*koszul_homology_algebra(a)).has_value();
      emit_object(j, format, out);
    } else if (verb == "resolve") {
      auto a = ring_from_json(load_json_file(input));
      auto m = select_module(a, module_sel, seed);
      bool deep = false;
      unsigned n = depth(&deep);
      auto pre = resolve(m, n, deep);
      Json j;
      j["betti"] = pre.betti;
      j["syzygy_dims"] = pre.syz_dims;
      emit_object(j, format, out);
    } else if (verb == "betti") {
      auto a = ring_from_json(load_json_file(input));
      auto m = select_module(a, module_sel, seed);
      bool deep = false;
      unsigned n = depth(&deep);
      emit_array(Json(resolve(m, n, deep).betti), format, out);
    } else if (verb == "bass") {
      auto a = ring_from_json(load_json_file(input));
      auto m = select_module(a, module_sel, seed);
      emit_array(Json(bass_table(m, depth(nullptr)).mu), format, out);
    } else if (verb == "ext" || verb == "tor") {
      auto a = ring_from_json(load_json_file(input));
      auto m = select_module(a, module_sel, seed);
      if (target_sel.empty()) target_sel = verb == "ext" ? "A" : "k";
      auto t = select_module(a, target_sel, seed);
      unsigned n = depth(nullptr);
      auto dims = verb == "ext" ? ext_dims(m, t, n) : tor_dims(m, t, n);
      emit_array(Json(dims), format, out);
    } else if (verb == "dagger") {
      auto s = skew_from_json(load_json_file(input));
      auto w = socle_split_pair(*s);
      Json j;
      if (w) {
        split_witness(*s, *w);  // verify; throws on a defective witness
        j["dagger"] = true;
        j["u"] = w->u_str;
        j["v"] = w->v_str;
        j["a"] = w->a;
        j["b"] = w->b;
      } else {
        j["dagger"] = false;
      }
      emit_object(j, format, out);
    } else if (verb == "classify") {
      auto s = skew_from_json(load_json_file(input));
      TorClass cl = classify(*s);
      Json j;
      j["class"] = cl.str();
      if (cl.tag == TorClass::TE || cl.tag == TorClass::B || cl.tag == TorClass::G ||
          cl.tag == TorClass::H) {
        j["m"] = cl.m;
        j["c"] = cl.c;
      }
      emit_object(j, format, out);
    } else if (verb == "golod") {
      auto a = ring_from_json(load_json_file(input));
      bool g = golod_multiplication(a);
      auto series = golod_series(a, depth(nullptr));
      // assembled by hand: the coefficients overflow fixed-width JSON numbers
      std::string arr = decimal_array(series);
      if (format == "tsv") {
        out << "golod\t" << (g ? "true" : "false") << '\n';
        out << "series\t" << arr.substr(1, arr.size() - 2) << '\n';
      } else {
        out << "{\"golod\":" << (g ? "true" : "false") << ",\"series\":" << arr << "}\n";
      }
    } else if (verb == "mf") {
      auto mf = mf_from_json(load_json_file(input));
      auto rep = mf_validate(mf);
      Json j;
      j["pass"] = rep.pass();
      j["shapes_ok"] = rep.shapes_ok;
      j["f_in_square"] = rep.f_in_square;
      j["entries_in_ideal"] = rep.entries_in_ideal;
      j["phi_psi_ok"] = rep.phi_psi_ok;
      j["psi_phi_ok"] = rep.psi_phi_ok;
      if (!rep.pass()) j["first_failure"] = rep.first_failure;
      if (rep.pass() && mf.nvars == 1) j["periodic_exact"] = periodic_exact(mf);
      emit_object(j, format, out);
      // the spec file claims phi/psi factor f; a failed check is a
      // verification failure, not an input error
      return rep.pass() ? 0 : 1;
    } else if (verb == "rigidity") {
      auto table = rigidity_scan(Field::rationals(), arg_n,
                                 opt_count("--range") ? range : 12u);
      if (format == "tsv") {
        out << "a\tb\ttor\text\ttor_double_vanish\text_double_vanish\n";
        for (const auto& r : table.rows) {
          out << r.a << '\t' << r.b << '\t' << join_sizes(r.tor) << '\t'
              << join_sizes(r.ext) << '\t' << (r.tor_double_vanish ? "true" : "false")
              << '\t' << (r.ext_double_vanish ? "true" : "false") << '\n';
        }
      } else {
        Json j;
        j["n"] = table.n;
        j["range"] = table.range;
        j["clean"] = table.clean;
        j["free_cases_vanish"] = table.free_cases_vanish;
        Json rows = Json::array();
        for (const auto& r : table.rows) {
          Json row;
          row["a"] = r.a;
          row["b"] = r.b;
          row["tor"] = r.tor;
          row["ext"] = r.ext;
          row["tor_double_vanish"] = r.tor_double_vanish;
          row["ext_double_vanish"] = r.ext_double_vanish;
          rows.push_back(row);
        }
        j["rows"] = rows;
        emit_object(j, format, out);
      }
    } else if (verb == "witness") {
      std::vector<unsigned> exps;
      std::size_t start = 0;
      while (start <= arg_exponents.size()) {
        std::size_t comma = arg_exponents.find(',', start);
        std::string piece = arg_exponents.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        exps.push_back(parse_uint(piece, "summand exponent"));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      auto w = residue_witness(Field::rationals(), arg_n, exps,
                               opt_count("--range") ? range : 0u);
      Json j;
      j["n"] = w.n;
      j["bound"] = w.bound;
      j["exponents"] = w.exponents;
      j["rank"] = w.rank;
      j["kernel_shifts"] = w.kernel_shifts;
      j["h0_dim"] = w.h0_dim;
      j["h1_dim"] = w.h1_dim;
      j["dbar"] = matrix_json(w.dbar);
      j["eta"] = matrix_json(w.eta);
      j["alpha"] = vec_json(w.w1);
      j["beta"] = vec_json(w.beta1);
      j["summand"] = w.summand;
      j["verified"] = w.verified;
      emit_object(j, format, out);
    } else if (verb == "growth") {
      Json in = load_json_file(input);
      const Json* arr = nullptr;
      if (in.is_array()) {
        arr = &in;
      } else if (in.is_object() && in.contains("sequence") && in["sequence"].is_array()) {
        arr = &in["sequence"];
      } else {
        throw InputError(
            "growth input must be a JSON array or an object with a \"sequence\" array");
      }
      std::vector<std::size_t> seq;
      for (const auto& v : *arr) {
        if (!v.is_number_unsigned())
          throw InputError("growth sequence entries must be nonnegative integers");
        seq.push_back(v.get<std::size_t>());
      }
      auto rep = growth_report(seq);
      std::string thr =
          rep.ratio_threshold ? std::to_string(*rep.ratio_threshold) : std::string("null");
      if (format == "tsv") {
        out << "ratio_threshold\t" << thr << '\n';
        out << "root_estimate\t" << fmt_double(rep.root_estimate) << '\n';
        out << "unbounded\t" << (rep.unbounded ? "true" : "false") << '\n';
        out << "finite_dimension\t" << (rep.finite_dimension ? "true" : "false") << '\n';
      } else {
        // assembled by hand to pin the %.6g float formatting
        out << "{\"ratio_threshold\":" << thr << ",\"root_estimate\":"
            << fmt_double(rep.root_estimate) << ",\"unbounded\":"
            << (rep.unbounded ? "true" : "false") << ",\"finite_dimension\":"
            << (rep.finite_dimension ? "true" : "false") << "}\n";
      }
    } else if (verb == "gallery") {
      if (gallery_args.empty())
        throw InputError("gallery needs a mode: list, or emit <family> <params...>");
      const std::string& mode = gallery_args.front();
      if (mode == "list") {
        Json items = Json::array();
        for (const auto& d : gallery_list()) {
          auto inst = generate(Field::rationals(), d);
          Json row;
          row["label"] = inst.label;
          row["family"] = family_name(d.family);
          row["golod"] = inst.golod_tag;
          row["dagger"] = inst.dagger_tag;
          items.push_back(row);
        }
        if (format == "tsv") {
          for (const auto& row : items) {
            out << row["label"].get<std::string>() << '\t'
                << row["family"].get<std::string>() << '\t'
                << (row["golod"].get<bool>() ? "true" : "false") << '\t'
                << (row["dagger"].get<bool>() ? "true" : "false") << '\n';
          }
        } else {
          out << items.dump() << '\n';
        }
      } else if (mode == "emit") {
        std::vector<std::string> p(gallery_args.begin() + 1, gallery_args.end());
        auto param = [&](std::size_t k) -> unsigned {
          if (k + 1 >= p.size())
            throw InputError("gallery emit " + p[0] + " is missing parameter " +
                             std::to_string(k + 1));
          return parse_uint(p[k + 1], "gallery parameter");
        };
        if (p.empty()) throw InputError("gallery emit needs a family tag");
        const std::string& tag = p[0];
        ExampleDescriptor d;
        if (tag == "power_of_m") {
          d = ExampleDescriptor::power_of_m(param(0), param(1));
        } else if (tag == "power_of_regseq") {
          d = ExampleDescriptor::power_of_regseq(param(0), param(1));
        } else if (tag == "trivial_ext") {
          d = ExampleDescriptor::trivial_ext(param(0), param(1));
        } else if (tag == "hypersurface") {
          d = ExampleDescriptor::hypersurface(param(0));
        } else if (tag == "determinantal") {
          d = ExampleDescriptor::determinantal(p.size() > 1 ? param(0) : 3u);
        } else if (tag == "codim3") {
          if (p.size() < 2)
            throw InputError("gallery emit codim3 needs a class tag: TE, B, G, or H");
          const std::string& cls = p[1];
          std::size_t m = param(1), c = param(2);
          TorClass tc;
          if (cls == "TE") {
            tc = TorClass::te(m, c);
          } else if (cls == "B") {
            tc = TorClass::b(m, c);
          } else if (cls == "G") {
            tc = TorClass::g(m, c, param(3));
          } else if (cls == "H") {
            tc = TorClass::h(m, c, param(3), param(4));
          } else {
            throw InputError("unknown multiplication class \"" + cls +
                             "\" (use TE, B, G, H)");
          }
          d = ExampleDescriptor::codim3(tc);
        } else {
          throw InputError("unknown gallery family \"" + tag +
                           "\" (use power_of_m, power_of_regseq, trivial_ext, codim3, "
                           "determinantal, hypersurface)");
        }
        out << spec_from_descriptor(d, Field::rationals()).dump() << '\n';
      } else {
        throw InputError("unknown gallery mode \"" + mode + "\" (use list or emit)");
      }
    } else if (verb == "accept") {
      auto results = run_acceptance(Field::rationals());
      bool all = std::all_of(results.begin(), results.end(),
                             [](const CriterionResult& r) { return r.pass; });
      if (format == "tsv") {
        bool color = color_enabled();
        for (const auto& r : results) {
          out << r.id << '\t' << r.name << '\t';
          const char* word = r.pass ? "pass" : "fail";
          if (color) {
            out << (r.pass ? "\x1b[32m" : "\x1b[31m") << word << "\x1b[0m";
          } else {
            out << word;
          }
          out << '\t' << r.detail << '\n';
        }
      } else {
        out << acceptance_json(results);
      }
      return all ? 0 : 1;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const GuardViolation& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InvariantViolation& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace dgalab
