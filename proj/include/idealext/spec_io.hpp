#ifndef IDEALEXT_SPEC_IO_HPP
#define IDEALEXT_SPEC_IO_HPP

#include <filesystem>
#include <memory>
#include <string>

#include <json.hpp>

#include "idealext/backslash.hpp"
#include "idealext/extnat.hpp"
#include "idealext/factor.hpp"
#include "idealext/monoid.hpp"
#include "idealext/rational.hpp"

namespace idealext {

using Json = nlohmann::ordered_json;

/// A loaded monoid spec file. Exactly one of the typed views is non-null.
struct MonoidSpec {
  std::shared_ptr<const Monoid> monoid;

  const IdealExtension* ideal() const { return dynamic_cast<const IdealExtension*>(monoid.get()); }
  const BackslashMonoid* backslash() const { return dynamic_cast<const BackslashMonoid*>(monoid.get()); }
  const AtomBasisMonoid* atoms() const { return dynamic_cast<const AtomBasisMonoid*>(monoid.get()); }
};

/// Strict: unknown or missing fields raise InvalidSpec naming the field.
MonoidSpec spec_from_json(const Json& j);
MonoidSpec spec_from_string(const std::string& text);
MonoidSpec load_spec(const std::filesystem::path& path);

Json spec_to_json(const Monoid& m);
MonoidSpec spec_of(const IdealExtension& s);

/// Axes are 1-based in JSON.
Json vec_json(const Vec& v);
Json vecs_json(std::span<const Vec> vs);
/// Integer, or the string "infinity".
Json extnat_json(const ExtNat& n);
/// "p/q", or "p" for integers.
Json rational_json(const Rational& r);

/// "3,4" -> (3,4)
Vec parse_vec(const std::string& text);

}  // namespace idealext

#endif  // IDEALEXT_SPEC_IO_HPP
