#include "idealext/spec_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "idealext/error.hpp"

namespace idealext {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::InvalidSpec, path + ": " + what);
}

void only_keys(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) bad(path, "expected an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items())
    if (!ok.count(k)) bad(path.empty() ? k : path + "." + k, "unknown field");
}

const Json& field(const Json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

std::uint64_t as_uint(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) {
    if (j.is_number_integer()) bad(path, "negative value");
    bad(path, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

std::vector<std::uint64_t> as_uints(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_uint(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Vec> as_vecs(const Json& j, const std::string& path, std::size_t dim) {
  if (!j.is_array()) bad(path, "expected an array of vectors");
  std::vector<Vec> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string p = path + "[" + std::to_string(i) + "]";
    auto c = as_uints(j[i], p);
    if (c.size() != dim) bad(p, "has " + std::to_string(c.size()) + " coordinates, dim is " + std::to_string(dim));
    out.emplace_back(c);
  }
  return out;
}

NumericalSemigroup semigroup_from(const Json& j, const std::string& path) {
  if (!j.is_object() || j.size() != 1) bad(path, "expected exactly one of ordinary, gaps, generators");
  if (j.contains("ordinary")) {
    auto m = as_uint(j["ordinary"], path + ".ordinary");
    if (m == 0) bad(path + ".ordinary", "multiplicity must be positive");
    return NumericalSemigroup::ordinary(m);
  }
  if (j.contains("gaps")) return NumericalSemigroup::from_gaps(as_uints(j["gaps"], path + ".gaps"));
  if (j.contains("generators")) return NumericalSemigroup::from_generators(as_uints(j["generators"], path + ".generators"));
  bad(path + "." + j.begin().key(), "unknown field");
}

}  // namespace

MonoidSpec spec_from_json(const Json& j) {
  if (!j.is_object()) bad("(root)", "expected an object");
  const Json& kind = field(j, "", "kind");
  if (!kind.is_string()) bad("kind", "expected a string");
  const std::string k = kind.get<std::string>();
  const std::size_t dim = as_uint(field(j, "", "dim"), "dim");
  if (dim == 0) bad("dim", "must be positive");
  MonoidSpec spec;
  if (k == "ideal_extension") {
    only_keys(j, "", {"kind", "dim", "minimals"});
    auto vs = as_vecs(field(j, "", "minimals"), "minimals", dim);
    if (vs.empty()) bad("minimals", "must be nonempty");
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (vs[i].is_zero()) bad("minimals[" + std::to_string(i) + "]", "zero vector");
    spec.monoid = std::make_shared<IdealExtension>(IdealExtension::from_minimals(dim, vs));
  } else if (k == "backslash") {
    only_keys(j, "", {"kind", "dim", "J", "T", "lambda"});
    auto axes = as_uints(field(j, "", "J"), "J");
    std::vector<std::size_t> zero_based;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      if (axes[i] == 0 || axes[i] > dim) bad("J[" + std::to_string(i) + "]", "axis outside 1.." + std::to_string(dim));
      zero_based.push_back(axes[i] - 1);
    }
    std::optional<std::vector<std::uint64_t>> lambda;
    if (j.contains("lambda")) lambda = as_uints(j["lambda"], "lambda");
    spec.monoid = std::make_shared<BackslashMonoid>(dim, zero_based, semigroup_from(field(j, "", "T"), "T"), lambda);
  } else if (k == "atoms") {
    only_keys(j, "", {"kind", "dim", "atoms"});
    spec.monoid = std::make_shared<AtomBasisMonoid>(as_vecs(field(j, "", "atoms"), "atoms", dim));
  } else {
    bad("kind", "expected ideal_extension, backslash or atoms, got \"" + k + "\"");
  }
  return spec;
}

MonoidSpec spec_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::InvalidSpec, e.what());
  }
  return spec_from_json(j);
}

MonoidSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidSpec, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return spec_from_string(ss.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + std::string(e.what()).substr(std::string(to_string(e.code())).size() + 2));
  }
}

Json spec_to_json(const Monoid& m) {
  Json j;
  j["kind"] = m.kind();
  j["dim"] = m.dim();
  if (auto* s = dynamic_cast<const IdealExtension*>(&m)) {
    j["minimals"] = vecs_json(s->minimals());
  } else if (auto* b = dynamic_cast<const BackslashMonoid*>(&m)) {
    Json axes = Json::array();
    for (std::size_t a : b->axes()) axes.push_back(a + 1);
    j["J"] = axes;
    if (auto om = b->semigroup().ordinary_multiplicity())
      j["T"] = {{"ordinary", *om}};
    else
      j["T"] = {{"gaps", b->semigroup().gaps()}};
  } else if (auto* a = dynamic_cast<const AtomBasisMonoid*>(&m)) {
    j["atoms"] = vecs_json(a->basis().atoms());
  }
  return j;
}

MonoidSpec spec_of(const IdealExtension& s) { return {std::make_shared<IdealExtension>(s)}; }

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (Coord c : v) a.push_back(c);
  return a;
}

Json vecs_json(std::span<const Vec> vs) {
  Json a = Json::array();
  for (const Vec& v : vs) a.push_back(vec_json(v));
  return a;
}

Json extnat_json(const ExtNat& n) {
  if (n.is_infinite()) return "infinity";
  return n.value();
}

Json rational_json(const Rational& r) { return to_string(r); }

Vec parse_vec(const std::string& text) {
  std::vector<Coord> c;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(',', pos);
    std::string part = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    Coord v = 0;
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || p != part.data() + part.size())
      throw Error(ErrorCode::InvalidSpec, "bad vector \"" + text + "\": expected comma-separated non-negative integers");
    c.push_back(v);
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return Vec(c);
}

}  // namespace idealext
