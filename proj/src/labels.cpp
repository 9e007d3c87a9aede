#include "ocycle/labels.hpp"

namespace ocycle {

std::string PointOrigin::to_string() const {
    switch (kind) {
        case Kind::Plain:
            return std::to_string(a);
        case Kind::Pair:
            return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case Kind::Infinity:
            return "inf_" + std::to_string(a);
    }
    return "?";
}

LabelScheme LabelScheme::double_plus_one(int v) {
    if (v < 1) throw std::domain_error("double_plus_one scheme requires v >= 1");
    return LabelScheme(Kind::DoublePlusOne, v, 0, 2 * v + 1);
}

LabelScheme LabelScheme::double_plus_seven(int v) {
    if (v < 1) throw std::domain_error("double_plus_seven scheme requires v >= 1");
    return LabelScheme(Kind::DoublePlusSeven, v, 0, 2 * v + 7);
}

LabelScheme LabelScheme::bose(int m) {
    if (m < 1) throw std::domain_error("bose scheme requires m >= 1");
    return LabelScheme(Kind::Bose, m, 0, 3 * m);
}

LabelScheme LabelScheme::skolem(int t) {
    if (t < 1) throw std::domain_error("skolem scheme requires t >= 1");
    return LabelScheme(Kind::Skolem, t, 0, 6 * t + 1);
}

LabelScheme LabelScheme::product(int u, int w) {
    if (u < 1 || w < 1) throw std::domain_error("product scheme requires u, w >= 1");
    return LabelScheme(Kind::Product, u, w, u * w);
}

LabelScheme LabelScheme::appendix(int v, int n_inf) {
    if (v < 1 || n_inf < 0 || (v - n_inf) % 2 != 0 || v - n_inf <= 0)
        throw std::domain_error("appendix scheme requires v - n_inf positive and even");
    return LabelScheme(Kind::Appendix, v, n_inf, v);
}

void LabelScheme::reject(const PointOrigin& o) const {
    throw std::domain_error("origin " + o.to_string() + " outside label scheme domain");
}

int LabelScheme::label(const PointOrigin& o) const {
    using K = PointOrigin::Kind;
    switch (kind_) {
        case Kind::DoublePlusOne: {
            int v = p1_;
            if (o.kind == K::Pair && (o.a == 0 || o.a == 1) && o.b >= 0 && o.b < v)
                return o.a * v + o.b;
            if (o.kind == K::Infinity && o.a == 0) return 2 * v;
            reject(o);
        }
        case Kind::DoublePlusSeven: {
            int v = p1_;
            if (o.kind == K::Pair && (o.a == 0 || o.a == 1) && o.b >= 0 && o.b < v)
                return o.a * v + o.b;
            if (o.kind == K::Infinity && o.a >= -3 && o.a <= 3) return 2 * v + (o.a + 3);
            reject(o);
        }
        case Kind::Bose: {
            int m = p1_;
            if (o.kind == K::Pair && o.a >= 0 && o.a < 3 && o.b >= 0 && o.b < m)
                return o.a * m + o.b;
            reject(o);
        }
        case Kind::Skolem: {
            int t = p1_;
            // Pair(coset=i in Z_3, residue=x in Z_2t)
            if (o.kind == K::Pair && o.a >= 0 && o.a < 3 && o.b >= 0 && o.b < 2 * t)
                return o.a * 2 * t + o.b;
            if (o.kind == K::Infinity && o.a == 0) return 6 * t;
            reject(o);
        }
        case Kind::Product: {
            int u = p1_, w = p2_;
            if (o.kind == K::Pair && o.a >= 0 && o.a < u && o.b >= 0 && o.b < w)
                return o.a * w + o.b;
            reject(o);
        }
        case Kind::Appendix: {
            int m = (p1_ - p2_) / 2;
            if (o.kind == K::Pair && (o.a == 0 || o.a == 1) && o.b >= 0 && o.b < m)
                return o.a * m + o.b;
            if (o.kind == K::Infinity && o.a >= 0 && o.a < p2_) return 2 * m + o.a;
            reject(o);
        }
    }
    throw std::logic_error("unhandled label scheme kind");
}

PointOrigin LabelScheme::origin(int label) const {
    if (label < 0 || label >= order_)
        throw std::domain_error("label " + std::to_string(label) + " outside [0," +
                                std::to_string(order_) + ")");
    switch (kind_) {
        case Kind::DoublePlusOne: {
            int v = p1_;
            if (label < 2 * v) return PointOrigin::pair(label / v, label % v);
            return PointOrigin::infinity(0);
        }
        case Kind::DoublePlusSeven: {
            int v = p1_;
            if (label < 2 * v) return PointOrigin::pair(label / v, label % v);
            return PointOrigin::infinity(label - 2 * v - 3);
        }
        case Kind::Bose:
            return PointOrigin::pair(label / p1_, label % p1_);
        case Kind::Skolem: {
            int t = p1_;
            if (label < 6 * t) return PointOrigin::pair(label / (2 * t), label % (2 * t));
            return PointOrigin::infinity(0);
        }
        case Kind::Product:
            return PointOrigin::pair(label / p2_, label % p2_);
        case Kind::Appendix: {
            int m = (p1_ - p2_) / 2;
            if (label < 2 * m) return PointOrigin::pair(label / m, label % m);
            return PointOrigin::infinity(label - 2 * m);
        }
    }
    throw std::logic_error("unhandled label scheme kind");
}

}  // namespace ocycle
