#include "torcay/affine.hpp"

#include <stdexcept>

namespace torcay {

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  return {f.t + f.a * g.t, f.a * g.a};
}

Vec2 apply(const AffineMap& f, const Vec2& u) { return f.t + f.a * u; }

AffineMap inverse(const AffineMap& f) {
  const Int d = det(f.a);
  if (d != 1 && d != -1) {
    throw std::invalid_argument("inverse: matrix is not invertible over the integers");
  }
  Mat2 inv;
  inv << f.a(1, 1), -f.a(0, 1), -f.a(1, 0), f.a(0, 0);
  inv *= d;  // adjugate over det, and det is +-1
  return {-(inv * f.t), inv};
}

std::string_view to_string(IsometryType type) {
  switch (type) {
    case IsometryType::Identity: return "identity";
    case IsometryType::Translation: return "translation";
    case IsometryType::Rotation: return "rotation";
    case IsometryType::Reflection: return "reflection";
    case IsometryType::GlideReflection: return "glide_reflection";
  }
  return "?";
}

IsometryType classify(const AffineMap& f) {
  const Int d = det(f.a);
  if (d != 1 && d != -1) {
    throw std::invalid_argument("classify: matrix is not invertible over the integers");
  }
  if (d == 1) {
    if (f.is_translation()) {
      return f.is_identity() ? IsometryType::Identity : IsometryType::Translation;
    }
    // Nontrivial orientation-preserving part: a fixed point (possibly
    // non-integral) exists iff I - a is invertible over the rationals.
    const Mat2 m = Mat2::Identity() - f.a;
    if (det(m) == 0) {
      throw std::invalid_argument("classify: infinite-order map is not a tiling isometry");
    }
    return IsometryType::Rotation;
  }
  const AffineMap ff = compose(f, f);
  if (!ff.is_translation()) {
    throw std::invalid_argument("classify: orientation-reversing part is not an involution");
  }
  return ff.is_identity() ? IsometryType::Reflection : IsometryType::GlideReflection;
}

const AffineMap& EmbeddingSpec::generator(char name) const {
  for (const auto& [g, map] : generators) {
    if (g == name) return map;
  }
  throw std::invalid_argument(std::string("unknown generator '") + name + "' in " + id);
}

namespace {

AffineMap make(Int tx, Int ty, Int a00, Int a01, Int a10, Int a11) {
  AffineMap f;
  f.t << tx, ty;
  f.a << a00, a01, a10, a11;
  return f;
}

// Lattice translations in the hexagonal basis: v1 = 2e1 + e2, v2 = e1 + 2e2.
const Vec2 kV1{2, 1};
const Vec2 kV2{1, 2};

std::vector<EmbeddingSpec> make_builtin() {
  std::vector<EmbeddingSpec> specs;

  {
    // Three point reflections; the face word is (abc)^2.
    EmbeddingSpec s;
    s.id = "sigma1";
    s.generators = {{'a', make(2, 1, -1, 0, 0, -1)},
                    {'b', make(3, 3, -1, 0, 0, -1)},
                    {'c', make(1, 2, -1, 0, 0, -1)}};
    s.relations = {"aa", "bb", "cc", "abcabc"};
    s.witnesses = {{"bc", kV1}, {"ba", kV2}};
    specs.push_back(std::move(s));
  }
  {
    // Three mirror reflections; the face words are (ab)^3-type.
    EmbeddingSpec s;
    s.id = "sigma2";
    s.generators = {{'a', make(0, 0, 1, 0, 1, -1)},
                    {'b', make(3, 3, 0, -1, -1, 0)},
                    {'c', make(0, 0, -1, 1, 0, 1)}};
    s.relations = {"aa", "bb", "cc", "ababab", "acacac", "bcbcbc"};
    s.witnesses = {{"abac", Vec2(2 * kV1 - kV2)}, {"cbca", Vec2(2 * kV2 - kV1)}};
    specs.push_back(std::move(s));
  }
  {
    // Point reflection plus glide reflection.
    EmbeddingSpec s;
    s.id = "sigma3";
    s.generators = {{'a', make(2, 1, -1, 0, 0, -1)}, {'b', make(1, 2, 1, 0, 1, -1)}};
    s.relations = {"aa", "abbabb", "babbab", "bbabba"};
    s.witnesses = {{"bb", kV1}, {"baba", Vec2(2 * kV2 - kV1)}};
    specs.push_back(std::move(s));
  }
  {
    // Point reflection plus 60-degree rotation. The translation subgroup is
    // generated by b^3a and bab^2; their images are recorded as computed.
    EmbeddingSpec s;
    s.id = "sigma4";
    s.generators = {{'a', make(2, 1, -1, 0, 0, -1)}, {'b', make(2, 1, 1, -1, 1, 0)}};
    s.relations = {"aa", "bbbbbb", "ababab", "bababa"};
    s.witnesses = {{"bbba", std::nullopt}, {"babb", std::nullopt}};
    specs.push_back(std::move(s));
  }
  return specs;
}

}  // namespace

const std::vector<EmbeddingSpec>& builtin_embeddings() {
  static const std::vector<EmbeddingSpec> specs = make_builtin();
  return specs;
}

AffineMap evaluate_word(const EmbeddingSpec& spec, std::string_view word) {
  AffineMap image = AffineMap::identity();
  for (char g : word) {
    image = compose(image, spec.generator(g));
  }
  return image;
}

VerificationReport verify_embedding(const EmbeddingSpec& spec) {
  VerificationReport report;
  report.id = spec.id;
  report.pass = true;

  for (const auto& word : spec.relations) {
    RelationResult r{word, evaluate_word(spec, word), false};
    r.holds = r.image.is_identity();
    report.pass = report.pass && r.holds;
    report.relations.push_back(std::move(r));
  }
  for (const auto& witness : spec.witnesses) {
    WitnessResult w{witness.word, evaluate_word(spec, witness.word), false, witness.expected,
                    false};
    w.is_translation = w.image.is_translation() && !w.image.is_identity();
    w.matches = w.is_translation && (!w.expected || eq(w.image.t, *w.expected));
    report.pass = report.pass && w.matches;
    report.witnesses.push_back(std::move(w));
  }
  return report;
}

}  // namespace torcay
