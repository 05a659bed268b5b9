#pragma once

#include "superformat/algebras.hpp"
#include "superformat/embeddings.hpp"
#include "superformat/formats.hpp"
#include "superformat/infinite.hpp"
#include "superformat/rootspace.hpp"

#include "json.hpp"

// JSON forms. Rationals are always strings "p/q" (or "p"), so documents
// round-trip bit-exactly.
namespace superformat {

using json = nlohmann::json;

void to_json(json& j, const Rational& r);
void from_json(const json& j, Rational& r);

/// {"size": p, "entries": [["0", "1", "-1/2", ...], ...]}
void to_json(json& j, const Matrix& m);
void from_json(const json& j, Matrix& m);

/// {"signs": [1, -1, ...]}
void to_json(json& j, const Format& f);
void from_json(const json& j, Format& f);

/// {"format": {...}, "matrix": {...}}
void to_json(json& j, const GradedMatrix& g);
void from_json(const json& j, GradedMatrix& g);

/// {"perm": [1, 4, 2, 5, 3]}
void to_json(json& j, const Permutation& p);
Permutation permutation_from_json(const json& j);

/// {"family": "osp_plus", "m": 2, "format": "diagonal"}; gl/sl use "n".
void to_json(json& j, const AlgebraId& a);
void from_json(const json& j, AlgebraId& a);

/// {"algebra": {...}, "h": [...], "e": [...], "f": [...]}
void to_json(json& j, const ChevalleyBasis& b);
void from_json(const json& j, ChevalleyBasis& b);

void to_json(json& j, const WeightSymbol& w);
void from_json(const json& j, WeightSymbol& w);
void to_json(json& j, const SimpleRoot& r);
void from_json(const json& j, SimpleRoot& r);

/// {"window": N, "labels": [-N, ..., N], "entries": rows in label order}
void to_json(json& j, const WindowedMatrix& w);
WindowedMatrix windowed_from_json(const json& j);

void to_json(json& j, const PrincipalTriple& t);
void to_json(json& j, const BosonicPair& x);
void to_json(json& j, const RelationCheck& c);
void to_json(json& j, const VerificationReport& r);

}  // namespace superformat
