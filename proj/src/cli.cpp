#include "catlens/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catlens/enumerate.hpp"
#include "catlens/io.hpp"

namespace catlens {

namespace {

namespace fs = std::filesystem;
using io::Json;

enum Exit : int { kOk = 0, kInvalid = 1, kStructural = 2, kGuard = 3, kInternal = 4 };

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

struct Options {
  std::string format = "text";
  std::string out_path;
  std::optional<std::uint64_t> max_candidates;
  std::uint64_t seed = 0;
};

std::uint64_t parse_count(const std::string& s, const std::string& what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw StructuralError(what + " must be a non-negative integer, got '" + s + "'");
  return v;
}

std::string counted(std::size_t n, const std::string& noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

std::string describe(const FinCategory& c) {
  return counted(c.object_count(), "object") + ", " + counted(c.morphism_count(), "morphism");
}

template <class T>
T expect(io::Document doc, const std::string& path, std::string_view kind) {
  if (auto* v = std::get_if<T>(&doc)) return std::move(*v);
  throw io::ParseError(path + ":/kind: expected kind \"" + std::string(kind) + "\", found \"" + io::kind_of(doc) + "\"");
}

class Session {
 public:
  Session(Options opt, std::ostream& out, std::ostream& err) : opt_(std::move(opt)), out_(out), err_(err) {}

  int validate(const std::string& path);
  int build(const std::string& kind, const std::vector<std::string>& args);
  int compose(const std::string& kind, const std::string& left, const std::string& right);
  int enumerate(const std::string& a, const std::string& b, const std::string& kind, bool list, std::size_t sample);
  int check(const std::string& predicate, const std::string& path);

  /// Flag, then CATLENS_MAX_CANDIDATES, then the library default.
  std::uint64_t guard() const {
    if (opt_.max_candidates) return *opt_.max_candidates;
    if (const char* env = std::getenv("CATLENS_MAX_CANDIDATES")) return parse_count(env, "CATLENS_MAX_CANDIDATES");
    return kDefaultMaxCandidates;
  }

  bool json() const { return opt_.format == "json"; }
  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

  int report(const ValidationReport& r, const std::vector<std::string>& notes = {}, bool to_file = true);

 private:
  int emit(const Json& doc, const std::string& summary);
  ValidationReport validate_document(const io::Document& doc, std::vector<std::string>& notes);
  int mismatch(const std::string& what, const std::string& left, const FinCategory& lc, const std::string& right,
               const FinCategory& rc);

  Options opt_;
  std::ostream& out_;
  std::ostream& err_;
};

int Session::report(const ValidationReport& r, const std::vector<std::string>& notes, bool to_file) {
  std::string text;
  if (json()) {
    text = io::dump(io::report_json(r));
  } else {
    text = r.to_text();
    for (const auto& n : notes) text += n + "\n";
  }
  if (to_file && !opt_.out_path.empty()) io::write_atomic(opt_.out_path, text);
  out_ << text;
  return r.valid() ? kOk : kInvalid;
}

int Session::emit(const Json& doc, const std::string& summary) {
  if (opt_.out_path.empty()) {
    out_ << io::dump(doc);
    return kOk;
  }
  io::write_atomic(opt_.out_path, io::dump(doc));
  if (json()) {
    Json j = Json::object();
    j["kind"] = doc["kind"];
    j["out"] = opt_.out_path;
    j["summary"] = summary;
    out_ << io::dump(j);
  } else {
    out_ << "wrote " << doc["kind"].get<std::string>() << " to " << opt_.out_path << ": " << summary << "\n";
  }
  return kOk;
}

int Session::mismatch(const std::string& what, const std::string& left, const FinCategory& lc, const std::string& right,
                      const FinCategory& rc) {
  err_ << "boundary mismatch: " << what << " of " << left << " (" << describe(lc) << ") differs from the source of "
       << right << " (" << describe(rc) << ")\n";
  return kInvalid;
}

ValidationReport functor_report(const FinFunctor& f) {
  ValidationReport r;
  r.merge(validate_category(f.source()), "source/");
  r.merge(validate_category(f.target()), "target/");
  r.merge(validate_functor(f));
  return r;
}

ValidationReport ioo_report(const FinFunctor& f) {
  ValidationReport r;
  const auto& a = f.source();
  const auto& b = f.target();
  for (Index o = 0; o < static_cast<Index>(a.object_count()); ++o) {
    if (b.object_id(f.on_object(o)) != a.object_id(o)) r.add("identity-on-objects", {a.object_id(o), b.object_id(f.on_object(o))});
  }
  for (Index o = 0; o < static_cast<Index>(b.object_count()); ++o) {
    if (!a.find_object(b.object_id(o))) r.add("identity-on-objects", {b.object_id(o)});
  }
  return r;
}

// First morphism on which two parallel functors differ, as a one-element witness.
std::vector<std::string> first_difference(const FinFunctor& x, const FinFunctor& y) {
  for (Index m = 0; m < static_cast<Index>(x.source().morphism_count()); ++m) {
    if (x.on_morphism(m) != y.on_morphism(m)) return {x.source().morphism_id(m)};
  }
  for (Index o = 0; o < static_cast<Index>(x.source().object_count()); ++o) {
    if (x.on_object(o) != y.on_object(o)) return {x.source().object_id(o)};
  }
  return {};
}

void compare_legs(ValidationReport& r, const std::string& law, const CategoryPtr& apex, const FinFunctor& left,
                  const FinFunctor& right, const CategoryPtr& want_apex, const FinFunctor& want_left,
                  const FinFunctor& want_right) {
  if (!same_category(apex, want_apex)) {
    r.add(law + "/apex", {describe(*apex), describe(*want_apex)});
    return;
  }
  if (!(left == want_left)) r.add(law + "/left", first_difference(left, want_left));
  if (!(right == want_right)) r.add(law + "/right", first_difference(right, want_right));
}

ValidationReport Session::validate_document(const io::Document& doc, std::vector<std::string>& notes) {
  return std::visit(
      Overloaded{
          [](const CategoryPtr& c) { return validate_category(*c); },
          [](const FinFunctor& f) { return functor_report(f); },
          [](const FinCofunctor& phi) {
            ValidationReport r;
            r.merge(validate_category(phi.source()), "source/");
            r.merge(validate_category(phi.target()), "target/");
            r.merge(validate_cofunctor(phi));
            return r;
          },
          [](const FinLens& l) {
            ValidationReport r;
            r.merge(validate_category(l.source()), "source/");
            r.merge(validate_category(l.target()), "target/");
            r.merge(validate_lens(l));
            return r;
          },
          [](const StateLens& s) { return validate_state_lens(s); },
          [](const FinDoubleCategory& d) { return validate_double_category(d); },
          [](const CofunctorSpan& s) {
            ValidationReport r;
            r.merge(functor_report(s.left), "left/");
            r.merge(functor_report(s.right), "right/");
            if (!r.valid()) return r;
            try {
              r.merge(validate_cofunctor(cofunctor_from_span(s)), "cofunctor/");
            } catch (const InvalidInput& e) {
              r.merge(e.report(), "span/");
            }
            return r;
          },
          [](const LensTriangle& t) {
            ValidationReport r;
            r.merge(functor_report(t.left), "left/");
            r.merge(functor_report(t.right), "right/");
            r.merge(functor_report(t.base), "get/");
            if (!r.valid()) return r;
            r.merge(ioo_report(t.left), "left/");
            r.merge(discrete_opfibration_report(t.right), "right/");
            auto via = compose_functors(t.left, t.base);
            if (!(via == t.right)) r.add("commutes", first_difference(via, t.right));
            return r;
          },
          [](const io::PullbackDoc& p) {
            ValidationReport r;
            r.merge(functor_report(p.f), "f/");
            r.merge(functor_report(p.g), "g/");
            if (!r.valid()) return r;
            auto pb = pullback_category(p.f, p.g);
            compare_legs(r, "pullback", p.apex, p.left, p.right, pb.apex, pb.left, pb.right);
            return r;
          },
          [](const io::CommaDoc& c) {
            ValidationReport r;
            r.merge(functor_report(c.f), "f/");
            if (!r.valid()) return r;
            auto cm = comma_category(c.f);
            compare_legs(r, "comma", c.apex, c.left, c.right, cm.apex, cm.left, cm.right);
            return r;
          },
          [this, &notes](const io::CLensDoc& c) {
            ValidationReport r;
            try {
              auto put = c.put ? *c.put : put_from_lift_table(c.get, comma_category(c.get), *c.lifts);
              auto tri = clens_to_internal_lens(c.get, put, guard());
              notes.push_back("double functors with the object component of phi: " + std::to_string(tri.phi_count));
              notes.push_back("double functors with the object component of phibar: " + std::to_string(tri.phibar_count));
              if (tri.phi_count != 1) r.add("phi-unique", {std::to_string(tri.phi_count)});
              if (tri.phibar_count != 1) r.add("phibar-unique", {std::to_string(tri.phibar_count)});
            } catch (const InvalidInput& e) {
              r.merge(e.report());
            }
            return r;
          },
          [](const io::SplitOpfibDoc& s) {
            ValidationReport r = functor_report(s.functor);
            if (r.valid()) r.merge(split_opfibration_report(s.functor, s.lifts));
            return r;
          },
      },
      doc);
}

int Session::validate(const std::string& path) {
  std::vector<std::string> notes;
  auto r = validate_document(io::read_document(path), notes);
  return report(r, notes);
}

std::vector<ObjId> names_from(const std::vector<std::string>& args) {
  if (args.size() == 1 && !args[0].empty() && std::all_of(args[0].begin(), args[0].end(), [](unsigned char ch) { return std::isdigit(ch) != 0; })) {
    return numbered(parse_count(args[0], "size"));
  }
  return args;
}

int Session::build(const std::string& kind, const std::vector<std::string>& args) {
  auto need = [&](std::size_t n) {
    if (args.size() != n) {
      throw StructuralError("build " + kind + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
    }
  };
  auto summarize = [](const FinCategory& c) { return describe(c); };
  if (kind == "codiscrete" || kind == "discrete") {
    auto c = kind == "codiscrete" ? codiscrete(names_from(args)) : discrete(names_from(args));
    return emit(io::to_json(c), summarize(c));
  }
  if (kind == "interval") {
    need(1);
    auto n = parse_count(args[0], "interval size");
    auto c = n == 0 ? codiscrete({}) : interval(n - 1);
    return emit(io::to_json(c), summarize(c));
  }
  if (kind == "arrow") {
    need(1);
    auto c = arrow_category(*io::read_category(args[0]));
    return emit(io::to_json(c), summarize(c));
  }
  if (kind == "pullback") {
    need(2);
    auto f = io::read_functor(args[0]);
    auto g = io::read_functor(args[1]);
    if (!same_category(f.target_ptr(), g.target_ptr())) {
      err_ << "boundary mismatch: target of " << args[0] << " (" << describe(f.target()) << ") differs from target of "
           << args[1] << " (" << describe(g.target()) << ")\n";
      return kInvalid;
    }
    auto pb = pullback_category(f, g);
    return emit(io::to_json(io::PullbackDoc{f, g, pb.apex, pb.left, pb.right}), summarize(*pb.apex));
  }
  if (kind == "comma") {
    need(1);
    auto f = io::read_functor(args[0]);
    auto cm = comma_category(f);
    return emit(io::to_json(io::CommaDoc{f, cm.apex, cm.left, cm.right}), summarize(*cm.apex));
  }
  if (kind == "squares") {
    need(1);
    auto d = squares_double_category(io::read_category(args[0]));
    return emit(io::to_json(d), "morphism category " + describe(*d.mor_cat));
  }
  if (kind == "lambda") {
    need(1);
    auto c = lambda_category(io::read_cofunctor(args[0]));
    return emit(io::to_json(c), summarize(c));
  }
  if (kind == "span") {
    need(1);
    auto s = span_of_cofunctor(io::read_cofunctor(args[0]));
    return emit(io::to_json(s), "apex " + describe(*s.apex));
  }
  if (kind == "cofunctor") {
    need(1);
    auto doc = io::read_document(args[0]);
    auto phi = cofunctor_from_span(expect<CofunctorSpan>(std::move(doc), args[0], "cofunctor-span"));
    return emit(io::to_json(phi), std::to_string(phi.anchored().size()) + " anchored updates");
  }
  if (kind == "triangle") {
    need(1);
    auto t = lens_triangle(io::read_lens(args[0]));
    return emit(io::to_json(t), "apex " + describe(*t.apex));
  }
  if (kind == "embed") {
    need(1);
    auto l = state_lens_to_internal(io::read_state_lens(args[0]));
    return emit(io::to_json(l), "source " + describe(l.source()) + ", target " + describe(l.target()));
  }
  if (kind == "dopf-lens") {
    need(1);
    auto l = dopf_to_lens(io::read_functor(args[0]));
    return emit(io::to_json(l), "source " + describe(l.source()) + ", target " + describe(l.target()));
  }
  throw StructuralError("unknown build kind '" + kind + "'");
}

int Session::compose(const std::string& kind, const std::string& left, const std::string& right) {
  if (kind == "functors") {
    auto f = io::read_functor(left);
    auto g = io::read_functor(right);
    if (!same_category(f.target_ptr(), g.source_ptr())) return mismatch("target", left, f.target(), right, g.source());
    auto h = compose_functors(f, g);
    Json doc = io::to_json(h);
    Json checks = Json::object();
    checks["discrete-opfibration"] = is_discrete_opfibration(h);
    checks["identity-on-objects"] = is_identity_on_objects(h);
    doc["checks"] = std::move(checks);
    return emit(doc, "discrete opfibration: " + std::string(is_discrete_opfibration(h) ? "yes" : "no"));
  }
  if (kind == "cofunctors") {
    auto x = io::read_cofunctor(left);
    auto y = io::read_cofunctor(right);
    if (!same_category(x.target_ptr(), y.source_ptr())) return mismatch("target", left, x.target(), right, y.source());
    auto z = compose_cofunctors(x, y);
    return emit(io::to_json(z), std::to_string(z.anchored().size()) + " anchored updates");
  }
  if (kind == "lenses") {
    auto x = io::read_lens(left);
    auto y = io::read_lens(right);
    if (!same_category(x.target_ptr(), y.source_ptr())) return mismatch("target", left, x.target(), right, y.source());
    auto z = compose_lenses(x, y);
    if (!(compose_puts_via_pullback(x, y) == z.put())) throw InternalError("lens composition routes disagree");
    Json doc = io::to_json(z);
    Json checks = Json::object();
    checks["pullback-route"] = "agrees";
    doc["checks"] = std::move(checks);
    return emit(doc, "componentwise and pullback routes agree");
  }
  if (kind == "state-lenses") {
    auto x = io::read_state_lens(left);
    auto y = io::read_state_lens(right);
    if (x.view() != y.source()) {
      err_ << "boundary mismatch: view of " << left << " (" << x.view().size() << " elements) differs from the source of "
           << right << " (" << y.source().size() << " elements)\n";
      return kInvalid;
    }
    auto z = compose_state_lenses(x, y);
    return emit(io::to_json(z), std::to_string(z.source().size()) + " states");
  }
  throw StructuralError("unknown compose kind '" + kind + "'");
}

Json functor_item(const FinFunctor& f) {
  Json j = io::to_json(f);
  j.erase("kind");
  j.erase("source");
  j.erase("target");
  return j;
}

Json cofunctor_item(const FinCofunctor& phi) {
  Json j = io::to_json(phi);
  Json out = Json::object();
  out["phi0"] = j["phi0"];
  out["phi1"] = j["phi1"];
  return out;
}

int Session::enumerate(const std::string& a_path, const std::string& b_path, const std::string& kind, bool list,
                       std::size_t sample) {
  auto a = io::read_category(a_path);
  auto b = io::read_category(b_path);
  std::vector<Json> items;
  if (kind == "lens") {
    for (const auto& l : enumerate_lenses(a, b, guard())) {
      Json j = functor_item(l.get());
      j["phi1"] = cofunctor_item(l.put())["phi1"];
      items.push_back(std::move(j));
    }
  } else if (kind == "cofunctor") {
    for (const auto& phi : enumerate_cofunctors(a, b, guard())) items.push_back(cofunctor_item(phi));
  } else if (kind == "dopf") {
    for (const auto& f : enumerate_dopfs(a, b, guard())) items.push_back(functor_item(f));
  } else {
    throw StructuralError("unknown enumeration kind '" + kind + "'");
  }
  const std::size_t count = items.size();
  if (sample > 0) {
    std::vector<Json> picked;
    std::mt19937_64 rng(opt_.seed);
    std::sample(items.begin(), items.end(), std::back_inserter(picked), sample, rng);
    items = std::move(picked);
    list = true;
  }
  Json doc = Json::object();
  doc["kind"] = "enumeration";
  doc["of"] = kind;
  doc["count"] = count;
  if (sample > 0) doc["seed"] = opt_.seed;
  doc["items"] = items;
  if (!opt_.out_path.empty()) io::write_atomic(opt_.out_path, io::dump(doc));
  if (json()) {
    if (!list) doc.erase("items");
    out_ << io::dump(doc);
  } else {
    out_ << "count: " << count << "\n";
    if (list) {
      for (std::size_t i = 0; i < items.size(); ++i) out_ << "[" << i << "] " << items[i].dump() << "\n";
    }
  }
  return kOk;
}

int Session::check(const std::string& predicate, const std::string& path) {
  if (predicate == "dopf" || predicate == "ioo") {
    auto f = io::read_functor(path);
    auto r = functor_report(f);
    if (r.valid()) r.merge(predicate == "dopf" ? discrete_opfibration_report(f) : ioo_report(f));
    return report(r);
  }
  if (predicate == "split-opfib") {
    auto doc = io::read_document(path);
    if (auto* s = std::get_if<io::SplitOpfibDoc>(&doc)) {
      auto r = functor_report(s->functor);
      if (r.valid()) r.merge(split_opfibration_report(s->functor, s->lifts));
      return report(r);
    }
    auto c = expect<io::CLensDoc>(std::move(doc), path, "split-opfibration");
    auto r = functor_report(c.get);
    if (!r.valid()) return report(r);
    auto lifts = c.lifts ? *c.lifts : lifts_of_put(c.get, comma_category(c.get), *c.put);
    r.merge(split_opfibration_report(c.get, lifts));
    return report(r);
  }
  throw StructuralError("unknown predicate '" + predicate + "'");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite categories, cofunctors and internal lenses", "catlens"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::string max_text;
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", opt.out_path, "Write the result to this file");
  app.add_option("--max-candidates", max_text, "Bound on enumerated candidates (default 1000000)");
  app.add_option("--seed", opt.seed, "Seed for sampled runs");

  std::string path, kind, left, right, predicate, a_path, b_path;
  std::vector<std::string> args;
  bool list = false;
  std::size_t sample = 0;

  auto* validate = app.add_subcommand("validate", "Check every law of a structure file");
  validate->add_option("file", path)->required();

  auto* build = app.add_subcommand("build", "Construct a structure");
  build->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"codiscrete", "discrete", "interval", "arrow", "pullback", "comma", "squares", "lambda",
                             "span", "cofunctor", "triangle", "embed", "dopf-lens"}));
  build->add_option("args", args);

  auto* compose = app.add_subcommand("compose", "Compose two structures, left first");
  compose->add_option("kind", kind)->required()->check(CLI::IsMember({"functors", "cofunctors", "lenses", "state-lenses"}));
  compose->add_option("left", left)->required();
  compose->add_option("right", right)->required();

  auto* enumerate = app.add_subcommand("enumerate", "Count structures between two categories");
  enumerate->add_option("source", a_path)->required();
  enumerate->add_option("target", b_path)->required();
  enumerate->add_option("--kind", kind)->required()->check(CLI::IsMember({"lens", "cofunctor", "dopf"}));
  enumerate->add_flag("--list", list, "Print every structure");
  enumerate->add_option("--sample", sample, "Print this many structures drawn with --seed");

  auto* check = app.add_subcommand("check", "Test a predicate");
  check->add_option("predicate", predicate)->required()->check(CLI::IsMember({"dopf", "ioo", "split-opfib"}));
  check->add_option("file", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kStructural;
  }

  try {
    if (!max_text.empty()) opt.max_candidates = parse_count(max_text, "--max-candidates");
    Session s(opt, out, err);
    try {
      if (validate->parsed()) return s.validate(path);
      if (build->parsed()) return s.build(kind, args);
      if (compose->parsed()) return s.compose(kind, left, right);
      if (enumerate->parsed()) return s.enumerate(a_path, b_path, kind, list, sample);
      if (check->parsed()) return s.check(predicate, path);
    } catch (const InvalidInput& e) {
      err << "invalid input: " << e.what() << "\n";
      s.report(e.report(), {}, false);
      return kInvalid;
    }
  } catch (const BoundaryMismatch& e) {
    err << "boundary mismatch: " << e.what() << "\n";
    return kInvalid;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return kGuard;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << "\n";
    return kStructural;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kStructural;
  }
  return kStructural;
}

}  // namespace catlens
