#pragma once

#include "apa/affine.hpp"
#include "apa/heis/diagram.hpp"

namespace apa::heis {

// slice presentations of the generator images in End((up down)^k)
SliceDiagram phi_gen_slices(const AffineGen& g, int k);

// image of a formal combination of generator words
HeisMorphism eval_phi(const AffineElement& a);

// all dotless simple diagrams, one per valid matching; |result| = u!
std::vector<BasisDiagram> simple_diagrams(const ObjectWord& top, const ObjectWord& bottom);

// (number of arcs, number of clockwise arcs); an arc is clockwise when its
// left endpoint letter points up
std::pair<int, int> degree(const Matching& m, const ObjectWord& top, const ObjectWord& bottom);

// permutation diagrams on (up down)^k
BasisDiagram pi_up(const Perm& p);
BasisDiagram pi_down(const Perm& p);

// tau words whose images are exactly the permutation diagrams (no correction
// terms); even letters for pi_up, odd for pi_down
AffineElement word_pi_up(const Perm& p, int k);
AffineElement word_pi_down(const Perm& p, int k);

// planar diagrams of End((up down)^k) as loop-free words in the e generators
std::vector<int> jones_planar_factorize(const BasisDiagram& b, int k);

// preimage of a dotless simple diagram under the evaluation into the diagram
// category: a combination of words in {e, tau} reducing to exactly the input
AffineElement decompose_endo(const BasisDiagram& alpha, int k);

// preimage of a whole morphism: bubbles become central letters, dots become
// x letters around the decomposed simple diagram
AffineElement heis_preimage(const HeisMorphism& m, int k);

}  // namespace apa::heis
