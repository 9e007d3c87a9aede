#ifndef OCYCLE_LABELS_HPP
#define OCYCLE_LABELS_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace ocycle {

// Structured name of a point before flattening to an integer label.
struct PointOrigin {
    enum class Kind { Plain, Pair, Infinity };

    Kind kind = Kind::Plain;
    int a = 0;  // Plain: value; Pair: coset; Infinity: index (may be negative)
    int b = 0;  // Pair: residue

    static PointOrigin plain(int z) { return {Kind::Plain, z, 0}; }
    static PointOrigin pair(int coset, int residue) { return {Kind::Pair, coset, residue}; }
    static PointOrigin infinity(int index = 0) { return {Kind::Infinity, index, 0}; }

    bool operator==(const PointOrigin&) const = default;
    std::string to_string() const;
};

// A design point: flat label plus (optionally) where it came from.
struct Point {
    int label = 0;
    std::optional<PointOrigin> origin;
};

// The normative origin <-> label bijections, one per construction.  Each
// scheme is total on its declared domain and throws std::domain_error
// elsewhere; origin(label(o)) == o for every o in the domain.
class LabelScheme {
  public:
    enum class Kind { DoublePlusOne, DoublePlusSeven, Bose, Skolem, Product, Appendix };

    // Order 2v+1:  (0,x) -> x,  (1,x) -> v+x,  infinity -> 2v.
    static LabelScheme double_plus_one(int v);
    // Order 2v+7:  (0,x) -> x,  (1,x) -> v+x,  inf_i -> 2v + (i+3) for |i| <= 3.
    static LabelScheme double_plus_seven(int v);
    // Order 3m:  (a,i) -> a*m + i for a in Z_3.
    static LabelScheme bose(int m);
    // Order 6t+1:  (x,i) -> i*2t + x for i in Z_3, x in Z_2t;  infinity -> 6t.
    static LabelScheme skolem(int t);
    // Order u*w:  (i,a) -> i*w + a.
    static LabelScheme product(int u, int w);
    // Appendix pair notation: (c,x) -> c*m + x, inf_k -> 2m + k, with
    // m = (v - n_inf)/2 residues and n_inf infinity points indexed 0..n_inf-1.
    static LabelScheme appendix(int v, int n_inf);

    int label(const PointOrigin& o) const;
    PointOrigin origin(int label) const;
    Point point(const PointOrigin& o) const { return {label(o), o}; }

    int order() const { return order_; }
    Kind kind() const { return kind_; }

  private:
    LabelScheme(Kind k, int p1, int p2, int order) : kind_(k), p1_(p1), p2_(p2), order_(order) {}

    [[noreturn]] void reject(const PointOrigin& o) const;

    Kind kind_;
    int p1_;  // v / m / t / u depending on kind
    int p2_;  // w (Product) or n_inf (Appendix)
    int order_;
};

}  // namespace ocycle

#endif
