#pragma once

#include "torcay/types.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace torcay {

/// Integer affine map u -> t + a*u, coordinates in the hexagonal basis
/// {e1, e2}. Every map produced here is an isometry of the tiling, so
/// det(a) is +1 or -1.
struct AffineMap {
  Vec2 t = Vec2::Zero();
  Mat2 a = Mat2::Identity();

  static AffineMap identity() { return {}; }
  static AffineMap translation(const Vec2& v) { return {v, Mat2::Identity()}; }
  bool is_identity() const { return eq(t, Vec2(0, 0)) && eq(a, Mat2::Identity().eval()); }
  bool is_translation() const { return eq(a, Mat2::Identity().eval()); }
};

inline bool operator==(const AffineMap& f, const AffineMap& g) {
  return eq(f.t, g.t) && eq(f.a, g.a);
}

/// Group law (t1, a1)(t2, a2) = (t1 + a1*t2, a1*a2), exact integer arithmetic.
AffineMap compose(const AffineMap& f, const AffineMap& g);

/// Image t + a*u of the point u.
Vec2 apply(const AffineMap& f, const Vec2& u);

/// Inverse (-a^-1 t, a^-1); requires det(a) = +-1.
AffineMap inverse(const AffineMap& f);

enum class IsometryType { Identity, Translation, Rotation, Reflection, GlideReflection };

std::string_view to_string(IsometryType type);

/// Classifies a lattice-preserving isometry into the five types. Throws if
/// the linear part is not invertible over the integers, or is of infinite
/// order (such a map cannot be an isometry of the tiling).
IsometryType classify(const AffineMap& f);

/// Generator data for one of the four plane realizations of the fullerene
/// presentations, plus the words that must collapse to the identity and the
/// words whose images must be translations.
struct EmbeddingSpec {
  struct Witness {
    std::string word;
    std::optional<Vec2> expected;  // pinned translation vector, when known
  };

  std::string id;
  std::vector<std::pair<char, AffineMap>> generators;
  std::vector<std::string> relations;
  std::vector<Witness> witnesses;

  const AffineMap& generator(char name) const;
};

/// The four built-in generator tables (sigma1..sigma4).
const std::vector<EmbeddingSpec>& builtin_embeddings();

/// Composes the generator images of `word` left to right.
AffineMap evaluate_word(const EmbeddingSpec& spec, std::string_view word);

struct RelationResult {
  std::string word;
  AffineMap image;
  bool holds;  // image == identity
};

struct WitnessResult {
  std::string word;
  AffineMap image;
  bool is_translation;
  std::optional<Vec2> expected;
  bool matches;  // translation, and equal to `expected` when pinned
};

struct VerificationReport {
  std::string id;
  std::vector<RelationResult> relations;
  std::vector<WitnessResult> witnesses;
  bool pass;
};

/// Checks every relation word and translation witness of `spec` by exact
/// composition. Failures are recorded in the report, never thrown.
VerificationReport verify_embedding(const EmbeddingSpec& spec);

}  // namespace torcay
