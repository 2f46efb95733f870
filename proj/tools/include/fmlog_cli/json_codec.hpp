#pragma once

// JSON interchange for the exact types. Rationals are "p/q" strings, subsets
// are sorted integer arrays or "1,2,4" keys. Decoders throw InvalidInput.

#include "json.hpp"

#include "fmlog/blowup_kn.hpp"
#include "fmlog/check.hpp"
#include "fmlog/fm_operad.hpp"
#include "fmlog/framed.hpp"
#include "fmlog/log_calculus.hpp"
#include "fmlog/nested.hpp"
#include "fmlog/screens.hpp"

namespace fmlog::cli {

using Json = nlohmann::ordered_json;

/// Parses text, converting parse errors into InvalidInput with the position.
Json parse_json(const std::string& text, const std::string& origin);
Json read_json_file(const std::string& path);

Json encode(const Rational& r);
Rational decode_rational(const Json& j);
Json encode(const Vec& v);
Vec decode_vec(const Json& j, int dim);

Json encode_subset(Mask m);
Json encode(const NestedCollection& c);
Json encode(const StableTree& t);
StableTree decode_tree(const Json& j, int n);

/// {"D": D, "arity": n, "tree": node}; a node is {"leaf": k} or
/// {"children": [...], "positions": [[...], ...]}. {"D": D, "config": [...]}
/// is accepted as input for a corolla.
Json encode(const FMPoint& x);
FMPoint decode_point(const Json& j);
Json encode(const FramedFMPoint& x);
FramedFMPoint decode_framed(const Json& j);

/// {"n": n, "d": d, "phi": {"1,2": [...], ...}}; {"d": d, "config": [...]}
/// is accepted as input.
Json encode(const SimpleScreen& s);
SimpleScreen decode_screen(const Json& j);

/// Bundle keys: "1,2" for factor 0, "tag:1,2" otherwise.
std::string bundle_key(const BundleId& id);
Json encode(const LatticeVector& v);
Json encode(const DFStructure& s);
Json encode_rows(const LogMorphism& m);
Json encode(const LogMorphism& m, bool with_structures);

Json encode(const CheckResult& r);
Json encode(const kn::Report& r);

}  // namespace fmlog::cli
