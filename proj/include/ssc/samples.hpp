#pragma once

#include <vector>

#include "ssc/random.hpp"
#include "ssc/scheme.hpp"
#include "ssc/subscheme.hpp"

namespace ssc::samples {

/// Patches QQ[u], QQ[v] glued along D(u) ~ D(v) by u -> 1/v.
Scheme projective_line();
/// Two copies of QQ[x] glued along D(x) by the identity.
Scheme doubled_origin_line();
/// The three standard charts of the projective plane.
Scheme projective_plane();
/// Three copies of QQ[x] glued pairwise along D(x): 0~1 and 1~2 by x -> x,
/// 0~2 by x -> -x. Every pair is consistent; the triple overlap is not.
Scheme twisted_triple_line();

/// P^1 -> P^1, u -> u^2 on patch 0 and v -> v^2 on patch 1.
SchemeMorphism squaring(const Scheme& projective_line);
/// Spec QQ[t] -> Spec QQ[x, y], x -> t, y -> t.
SchemeMorphism diagonal();

/// The closed subscheme of P^1 cut out by a binary form given by its
/// dehomogenization on patch 0: f(u) of degree <= `degree` (the point at
/// infinity gets multiplicity degree - deg f).
ClosedSubscheme projective_line_form(const Scheme& projective_line, const Polynomial& f_of_u,
                                     unsigned degree);
/// A random binary form: product of linear factors with small integer roots.
ClosedSubscheme random_projective_line_subscheme(Rng& rng, const Scheme& projective_line);

/// Closed subscheme of a one-patch scheme with 1 to `max_gens` random generators.
ClosedSubscheme random_affine_subscheme(Rng& rng, const Scheme& affine, std::size_t max_gens,
                                        const RandomShape& shape);

/// Morphism between one-patch schemes given by random polynomial images of
/// the target variables.
SchemeMorphism random_substitution(Rng& rng, const Scheme& source, const Scheme& target,
                                   const RandomShape& shape);

}  // namespace ssc::samples
