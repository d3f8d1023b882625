#ifndef TTK_CITATIONS_HPP
#define TTK_CITATIONS_HPP

#include <string>

namespace ttk {

// A cited result together with the verbatim hypothesis/statement it checks
// and a rendering of the checked values.  Certificates are only as good as
// these records, so the strings are fixed constants shared by the producers
// and the re-validator.
struct Citation {
  std::string result;
  std::string quote;
  std::string detail;
};

namespace cite {

struct Entry {
  const char* result;
  const char* quote;
};

inline constexpr Entry torus_bridge{
    "torus-bridge-number", "b_0(K) = min{p, q}"};
inline constexpr Entry high_twist_bridge{
    "bridge-number-high-twist",
    "given 1 < r < p < q, if |s| > 18p then b_0(K_s) = p"};
inline constexpr Entry bridge_sphere_upper{
    "bridge-sphere-from-torus-position",
    "b_0(K_s) <= p for any integer s"};
inline constexpr Entry meridional_stabilization{
    "meridional-stabilization", "b_{g+1}(L) <= b_g(L) - 1"};
inline constexpr Entry genus_one_upper{
    "genus-one-upper-bound", "b_1(T(p,q,r,s)) <= min{r, p-r}"};
inline constexpr Entry torus_regime_b1{
    "torus-regime-genus-one", "b_1 bound trivial in the torus regime"};
inline constexpr Entry genus_two_upper{
    "genus-two-upper-bound", "b_2(K) = 1 from the natural genus-two position"};
inline constexpr Entry link_hyperbolic{
    "link-hyperbolic-twist-region",
    "when r > 1 is not a multiple of p or q, the link K u C is hyperbolic"};
inline constexpr Entry knot_hyperbolic{
    "knot-hyperbolic-high-twist", "K_s is hyperbolic whenever |s| > 5"};
inline constexpr Entry arc_annulus{
    "arc-count-bound", "n <= 9 chi(F) chi(G)"};
inline constexpr Entry nonparallel_arcs{
    "nonparallel-arc-bound", "|Lambda| <= |Lambda'| <= -3 chi(S)"};
inline constexpr Entry genus_one_lower{
    "genus-one-lower-bound",
    "b_g(K^n) >= (1/2)(n/(-36 chi(Q)) - 2g + 1)"};
inline constexpr Entry catching_surface{
    "catching-surface-euler",
    "chi(Q) = 1 - (|a|-1)(|b|-1) - |bc| - |ad|"};
inline constexpr Entry surface_slope_formula{
    "surface-slope", "the surface slope of T(p,q,r,s) is pq + r^2 s"};
inline constexpr Entry parameter_inequalities{
    "twisted-parameter-inequalities",
    "for sufficiently large n, 1 < r < p < q"};
inline constexpr Entry primitive_inside{
    "primitive-inside-handlebody",
    "primitive in H_1 iff r = +-1 (mod p) or r = +-q (mod p)"};
inline constexpr Entry primitive_outside{
    "primitive-outside-handlebody",
    "primitive in H_2 iff s = +-1 and (r = +-1 (mod q) or r = +-p (mod q))"};
inline constexpr Entry tunnel_one{
    "tunnel-number-one",
    "primitive on one side of the splitting implies tunnel number one"};
inline constexpr Entry berge_vii_viii{
    "berge-type-vii-viii",
    "doubly primitive knots in the fiber of a trefoil or figure eight knot"};
inline constexpr Entry dean_first{
    "dean-first-family", "T(p, q, 2q-p, +-1) with (p+1)/2 < q < p"};
inline constexpr Entry dean_second{
    "dean-second-family",
    "T(p, q, p-lq, +-1) with 1 < q < p/2 and 2 <= l <= (p-2)/q"};
inline constexpr Entry atoroidal_via_bridge{
    "atoroidal-via-genus-one-bridge",
    "toroidal tunnel number one knots have genus one bridge number one; "
    "b_1 >= 2 with tunnel number one implies hyperbolic"};
inline constexpr Entry distance_two{
    "heegaard-distance-two",
    "hyperbolicity excludes distance <= 1; disjoint primitive disks force "
    "distance <= 2"};

}  // namespace cite

inline Citation make_citation(const cite::Entry& entry, std::string detail) {
  return Citation{entry.result, entry.quote, std::move(detail)};
}

}  // namespace ttk

#endif
