#include "io.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#ifndef HEARTGLUE_DEFAULT_CORPUS_DIR
#define HEARTGLUE_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace heartglue::cli {

namespace fs = std::filesystem;

InputError::InputError(std::string file, int line, const std::string& message)
    : std::runtime_error(file + ":" + std::to_string(line) + ": " + message),
      file_(std::move(file)),
      line_(line),
      message_(message) {}

namespace {

std::string escape_token(const std::string& k) {
  std::string out;
  for (char c : k) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

// Walks text that already parsed as JSON.
class LineScanner {
 public:
  LineScanner(const std::string& s, std::map<std::string, int>& out) : s_(s), out_(out) {}

  void run() { value(""); }

 private:
  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
      if (s_[i_] == '\n') ++line_;
      ++i_;
    }
  }

  std::string str() {
    std::string r;
    ++i_;
    while (i_ < s_.size() && s_[i_] != '"') {
      if (s_[i_] == '\\' && i_ + 1 < s_.size()) {
        ++i_;
        switch (s_[i_]) {
          case 'n': r += '\n'; break;
          case 't': r += '\t'; break;
          case 'u': r += '?'; i_ += 4; break;
          default: r += s_[i_];
        }
      } else {
        r += s_[i_];
      }
      ++i_;
    }
    ++i_;
    return r;
  }

  void value(const std::string& ptr) {
    ws();
    if (i_ >= s_.size()) return;
    out_[ptr] = line_;
    char c = s_[i_];
    if (c == '{') {
      ++i_;
      ws();
      if (i_ < s_.size() && s_[i_] == '}') {
        ++i_;
        return;
      }
      while (i_ < s_.size()) {
        ws();
        std::string key = str();
        ws();
        ++i_;  // ':'
        value(ptr + "/" + escape_token(key));
        ws();
        if (i_ < s_.size() && s_[i_] == ',') {
          ++i_;
          continue;
        }
        ++i_;
        return;
      }
    } else if (c == '[') {
      ++i_;
      ws();
      if (i_ < s_.size() && s_[i_] == ']') {
        ++i_;
        return;
      }
      for (std::size_t n = 0; i_ < s_.size(); ++n) {
        value(ptr + "/" + std::to_string(n));
        ws();
        if (i_ < s_.size() && s_[i_] == ',') {
          ++i_;
          continue;
        }
        ++i_;
        return;
      }
    } else if (c == '"') {
      str();
    } else {
      while (i_ < s_.size() && std::string_view(",]} \t\r\n").find(s_[i_]) == std::string_view::npos) ++i_;
    }
  }

  const std::string& s_;
  std::map<std::string, int>& out_;
  std::size_t i_ = 0;
  int line_ = 1;
};

std::string ptr_join(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string ptr_join(const std::string& base, std::size_t k) { return base + "/" + std::to_string(k); }

const json& at_ptr(const Document& d, const std::string& ptr) {
  return ptr.empty() ? d.doc : d.doc.at(json::json_pointer(ptr));
}

int get_int(const Document& d, const std::string& ptr, const char* what) {
  const json& v = at_ptr(d, ptr);
  if (!v.is_number_integer()) d.fail(ptr, std::string(what) + " must be an integer");
  return v.get<int>();
}

Rat get_rat(const Document& d, const std::string& ptr) {
  const json& v = at_ptr(d, ptr);
  if (v.is_number_integer()) return Rat(v.get<long>());
  if (!v.is_string()) d.fail(ptr, "rational entries must be \"p/q\" strings or integers");
  try {
    return parse_rat(v.get<std::string>());
  } catch (const std::invalid_argument&) {
    d.fail(ptr, "not a rational number: \"" + v.get<std::string>() + "\"");
  }
}

Matrix get_matrix(const Document& d, const std::string& ptr, std::size_t rows, std::size_t cols) {
  const json& v = at_ptr(d, ptr);
  if (!v.is_array()) d.fail(ptr, "matrix must be an array of rows");
  if (v.size() != rows && !(rows == 0 && v.size() == 0))
    d.fail(ptr, "matrix needs " + std::to_string(rows) + " rows, found " + std::to_string(v.size()));
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::string rp = ptr_join(ptr, r);
    const json& row = v[r];
    if (!row.is_array() || row.size() != cols)
      d.fail(rp, "row needs " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = get_rat(d, ptr_join(rp, c));
  }
  return m;
}

int vertex(const Document& d, const std::string& ptr, const AlgebraPtr& alg) {
  int v = get_int(d, ptr, "vertex");
  if (v < 1 || v > alg->vertices())
    d.fail(ptr, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(alg->vertices()));
  return v;
}

Cx complex_from_json(const Document& d, const std::string& ptr, const AlgebraPtr& alg) {
  const json& c = at_ptr(d, ptr);
  if (!c.is_object()) d.fail(ptr, "complex must be an object");
  int lo = c.contains("lo") ? get_int(d, ptr_join(ptr, "lo"), "lo") : 0;
  if (!c.contains("terms") || !c["terms"].is_array()) d.fail(ptr, "complex needs a \"terms\" array");
  std::vector<Rep> terms;
  for (std::size_t k = 0; k < c["terms"].size(); ++k)
    terms.push_back(rep_from_json(d, ptr_join(ptr_join(ptr, "terms"), k), alg));
  std::vector<RepMap> diffs;
  std::string dp = ptr_join(ptr, "differentials");
  std::size_t want = terms.empty() ? 0 : terms.size() - 1;
  if (want > 0 && (!c.contains("differentials") || !c["differentials"].is_array()))
    d.fail(ptr, "complex needs a \"differentials\" array");
  if (want > 0 && c["differentials"].size() != want)
    d.fail(dp, "expected " + std::to_string(want) + " differentials");
  for (std::size_t k = 0; k < want; ++k) {
    std::string kp = ptr_join(dp, k);
    const json& dj = at_ptr(d, kp);
    if (!dj.is_array() || dj.size() != static_cast<std::size_t>(alg->vertices()))
      d.fail(kp, "differential needs one matrix per vertex");
    RepMap f{terms[k], terms[k + 1], {}};
    for (int v = 1; v <= alg->vertices(); ++v)
      f.blocks.push_back(get_matrix(d, ptr_join(kp, static_cast<std::size_t>(v - 1)),
                                    static_cast<std::size_t>(terms[k + 1].dim(v)),
                                    static_cast<std::size_t>(terms[k].dim(v))));
    diffs.push_back(f);
  }
  try {
    return make_cx(alg, lo, std::move(terms), std::move(diffs));
  } catch (const ModuleError& e) {
    d.fail(ptr, e.what());
  }
}

}  // namespace

std::map<std::string, int> value_lines(const std::string& text) {
  std::map<std::string, int> out;
  LineScanner(text, out).run();
  return out;
}

int Document::line_of(const std::string& pointer) const {
  std::string p = pointer;
  for (;;) {
    auto it = lines.find(p);
    if (it != lines.end()) return it->second;
    if (p.empty()) return 1;
    p = p.substr(0, p.rfind('/'));
  }
}

void Document::fail(const std::string& pointer, const std::string& message) const {
  throw InputError(path, line_of(pointer), message);
}

Document read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, 0, "cannot read file");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  Document d;
  d.path = path;
  try {
    d.doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1;
    for (std::size_t k = 0; k < upto; ++k)
      if (text[k] == '\n') ++line;
    std::string msg = e.what();
    std::size_t cut = msg.find("] ");
    if (cut != std::string::npos) msg = msg.substr(cut + 2);
    throw InputError(path, line, "invalid JSON: " + msg);
  }
  d.lines = value_lines(text);
  return d;
}

AlgebraPtr algebra_from_json(const Document& d) {
  const json& j = d.doc;
  if (!j.is_object()) d.fail("", "algebra description must be an object");
  if (!j.contains("vertices")) d.fail("", "missing \"vertices\"");
  Quiver q;
  q.vertices = get_int(d, "/vertices", "vertices");
  if (q.vertices < 1) d.fail("/vertices", "an algebra needs at least one vertex");
  if (!j.contains("arrows") || !j["arrows"].is_array()) d.fail("", "missing \"arrows\" array");
  std::set<std::string> names;
  for (std::size_t k = 0; k < j["arrows"].size(); ++k) {
    std::string ap = ptr_join("/arrows", k);
    const json& a = j["arrows"][k];
    if (!a.is_object() || !a.contains("name") || !a["name"].is_string())
      d.fail(ap, "arrow needs a \"name\" string");
    if (!a.contains("source") || !a.contains("target")) d.fail(ap, "arrow needs \"source\" and \"target\"");
    Arrow ar{a["name"].get<std::string>(), get_int(d, ap + "/source", "source"),
             get_int(d, ap + "/target", "target")};
    if (!names.insert(ar.name).second) d.fail(ap + "/name", "duplicate arrow name \"" + ar.name + "\"");
    for (const char* end : {"source", "target"}) {
      int v = std::string(end) == "source" ? ar.source : ar.target;
      if (v < 1 || v > q.vertices)
        d.fail(ap + "/" + end, std::string(end) + " " + std::to_string(v) + " out of range 1.." +
                                   std::to_string(q.vertices));
    }
    if (ar.source >= ar.target)
      d.fail(ap, "arrow \"" + ar.name + "\" must go from a smaller to a larger vertex");
    q.arrows.push_back(ar);
  }
  std::vector<Relation> rels;
  if (j.contains("relations")) {
    if (!j["relations"].is_array()) d.fail("/relations", "relations must be an array");
    for (std::size_t r = 0; r < j["relations"].size(); ++r) {
      std::string rp = ptr_join("/relations", r);
      const json& rel = j["relations"][r];
      if (!rel.is_array() || rel.empty()) d.fail(rp, "relation must be a nonempty array of terms");
      Relation out;
      for (std::size_t t = 0; t < rel.size(); ++t) {
        std::string tp = ptr_join(rp, t);
        if (!rel[t].is_object() || !rel[t].contains("path") || !rel[t]["path"].is_array())
          d.fail(tp, "term needs a \"path\" array");
        Term term;
        term.coef = rel[t].contains("coef") ? get_rat(d, tp + "/coef") : Rat(1);
        const json& path = rel[t]["path"];
        if (path.empty()) d.fail(tp + "/path", "relation paths must have positive length");
        for (std::size_t s = 0; s < path.size(); ++s) {
          std::string sp = ptr_join(tp + "/path", s);
          if (!path[s].is_string()) d.fail(sp, "path entries are arrow names");
          int idx = q.arrow_index(path[s].get<std::string>());
          if (idx < 0) d.fail(sp, "unknown arrow \"" + path[s].get<std::string>() + "\"");
          term.path.push_back(idx);
        }
        out.push_back(term);
      }
      rels.push_back(out);
    }
  }
  try {
    return build_algebra(q, rels);
  } catch (const AlgebraError& e) {
    d.fail(rels.empty() ? "" : "/relations", e.what());
  }
}

LoadedAlgebra load_algebra(const std::string& path_or_name) {
  std::string path = path_or_name;
  if (!fs::exists(path)) {
    fs::path dir(corpus_dir());
    for (const fs::path& cand : {dir / (path_or_name + ".json"), dir / "fixtures" / (path_or_name + ".json")})
      if (fs::exists(cand)) {
        path = cand.string();
        break;
      }
  }
  if (!fs::exists(path)) throw InputError(path_or_name, 0, "no such file or corpus algebra");
  Document d = read_document(path);
  LoadedAlgebra out;
  out.path = path;
  out.alg = algebra_from_json(d);
  if (d.doc.contains("name") && d.doc["name"].is_string())
    out.name = d.doc["name"].get<std::string>();
  else
    out.name = fs::path(path).stem().string();
  return out;
}

Rep rep_from_json(const Document& d, const std::string& ptr, const AlgebraPtr& alg) {
  const json& j = at_ptr(d, ptr);
  if (!j.is_object()) d.fail(ptr, "module must be an object");
  if (j.contains("simple")) return simple(alg, vertex(d, ptr_join(ptr, "simple"), alg));
  if (j.contains("projective")) return projective(alg, vertex(d, ptr_join(ptr, "projective"), alg));
  if (j.contains("zero")) return zero_rep(alg);
  std::string mp = j.contains("module") ? ptr_join(ptr, "module") : ptr;
  const json& m = at_ptr(d, mp);
  if (!m.is_object() || !m.contains("dims") || !m["dims"].is_array())
    d.fail(mp, "module needs \"dims\", or one of \"simple\", \"projective\", \"zero\"");
  if (m["dims"].size() != static_cast<std::size_t>(alg->vertices()))
    d.fail(mp + "/dims", "dims needs one entry per vertex");
  std::vector<int> dims;
  for (std::size_t v = 0; v < m["dims"].size(); ++v) {
    int dv = get_int(d, ptr_join(mp + "/dims", v), "dimension");
    if (dv < 0) d.fail(ptr_join(mp + "/dims", v), "dimensions are nonnegative");
    dims.push_back(dv);
  }
  const Quiver& q = alg->quiver();
  json arrows = m.contains("arrows") ? m["arrows"] : json::object();
  if (!arrows.is_object()) d.fail(mp + "/arrows", "arrows must map arrow names to matrices");
  for (const auto& [name, val] : arrows.items())
    if (q.arrow_index(name) < 0) d.fail(mp + "/arrows/" + escape_token(name), "unknown arrow \"" + name + "\"");
  std::vector<Matrix> act;
  for (const auto& ar : q.arrows) {
    std::size_t rows = static_cast<std::size_t>(dims[static_cast<std::size_t>(ar.source - 1)]);
    std::size_t cols = static_cast<std::size_t>(dims[static_cast<std::size_t>(ar.target - 1)]);
    if (arrows.contains(ar.name))
      act.push_back(get_matrix(d, mp + "/arrows/" + escape_token(ar.name), rows, cols));
    else
      act.emplace_back(rows, cols);
  }
  try {
    return make_rep(alg, std::move(dims), std::move(act));
  } catch (const ModuleError& e) {
    d.fail(mp, e.what());
  }
}

ObjectSet objects_from_json(const Document& d, const AlgebraPtr& alg) {
  const json& j = d.doc;
  if (!j.is_object() || !j.contains("objects") || !j["objects"].is_array())
    d.fail("", "object file needs an \"objects\" array");
  ObjectSet out;
  for (std::size_t k = 0; k < j["objects"].size(); ++k) {
    std::string op = ptr_join("/objects", k);
    const json& o = j["objects"][k];
    if (!o.is_object()) d.fail(op, "object must be a JSON object");
    NamedObject no;
    no.name = o.contains("name") && o["name"].is_string() ? o["name"].get<std::string>()
                                                          : "X" + std::to_string(k + 1);
    if (o.contains("complex"))
      no.cx = complex_from_json(d, op + "/complex", alg);
    else
      no.cx = module_cx(rep_from_json(d, op, alg));
    if (o.contains("shift")) no.cx = shift(no.cx, get_int(d, op + "/shift", "shift"));
    out.objects.push_back(no);
  }
  if (out.objects.empty()) d.fail("/objects", "object list is empty");
  if (j.contains("shifts")) {
    if (!j["shifts"].is_array() || j["shifts"].size() != out.objects.size())
      d.fail("/shifts", "shifts needs one integer per object");
    for (std::size_t k = 0; k < out.objects.size(); ++k)
      out.shifts.push_back(get_int(d, ptr_join("/shifts", k), "shift"));
  }
  if (j.contains("strong")) {
    if (!j["strong"].is_boolean()) d.fail("/strong", "strong must be true or false");
    out.strong = j["strong"].get<bool>();
  }
  return out;
}

ObjectSet load_objects(const std::string& path, const AlgebraPtr& alg) {
  std::string p = path;
  if (!fs::exists(p)) {
    fs::path cand = fs::path(corpus_dir()) / "fixtures" / (path + ".json");
    if (fs::exists(cand)) p = cand.string();
  }
  return objects_from_json(read_document(p), alg);
}

ObjectSet projective_objects(const AlgebraPtr& alg) {
  ObjectSet out;
  for (int i = 1; i <= alg->vertices(); ++i)
    out.objects.push_back(NamedObject{"P" + std::to_string(i), module_cx(projective(alg, i))});
  return out;
}

std::string corpus_dir() {
  if (const char* env = std::getenv("HEARTGLUE_CORPUS_DIR"); env && *env) return env;
  return HEARTGLUE_DEFAULT_CORPUS_DIR;
}

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names{"a2", "a3", "a3_rel", "kronecker", "comm_square"};
  return names;
}

std::vector<LoadedAlgebra> load_corpus() {
  std::vector<LoadedAlgebra> out;
  for (const auto& n : corpus_names())
    out.push_back(load_algebra((fs::path(corpus_dir()) / (n + ".json")).string()));
  return out;
}

}  // namespace heartglue::cli
