#pragma once

#include <json.hpp>

#include "twistlab/braid.hpp"
#include "twistlab/complex.hpp"
#include "twistlab/mesh.hpp"
#include "twistlab/reconstruct.hpp"
#include "twistlab/twists.hpp"

namespace twistlab {

using Json = nlohmann::json;

// Readers throw ValidationError on malformed input.
Json diagram_to_json(const DynkinDiagram& d);
DynkinDiagram diagram_from_json(const Json& j);

Json word_to_json(const BraidWord& w);
BraidWord word_from_json(const Json& j);
// Accepts either a word object or a bare letter array read against d.
BraidWord word_from_json(const Json& j, const DynkinDiagram& d);
// Letters like "s3" or "3" separated by spaces or commas; "e" or "" is the empty word.
BraidWord parse_word(const DynkinDiagram& d, std::string_view text);

Json layered_to_json(const LayeredWord& lw);
LayeredWord layered_from_json(const Json& j);

template <Field F>
Json morph_to_json(const MorphElement<F>& f);
template <Field F>
MorphElement<F> morph_from_json(const DynkinDiagram& d, const Json& j);

template <Field F>
Json complex_to_json(const ProjComplex<F>& x);
template <Field F>
ProjComplex<F> complex_from_json(const DynkinDiagram& d, const Json& j);

Json profile_to_json(const HomProfile& p);

template <Field F>
Json two_term_to_json(const TwoTermObject<F>& t);
Json shape_to_json(const TwoTermShape& s);

Json recovery_to_json(const Recovery& r, bool verified);

Json vertex_to_json(const ZGammaVertex& v);
Json decorated_to_json(const DecoratedSet& s);
DecoratedSet decorated_from_json(const DynkinDiagram& d, const Json& j);
Json certificate_to_json(const MoveCertificate& c);
MoveCertificate certificate_from_json(const Json& j);

}  // namespace twistlab
