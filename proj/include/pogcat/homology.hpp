#pragma once

// Homology of bounded cochain complexes of free Z-modules.
//
// Differentials raise degree: d_k : C^k -> C^{k+1}, stored as a
// dim(C^{k+1}) x dim(C^k) matrix.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pogcat/int_matrix.hpp"

namespace pogcat {

struct InvalidComplex : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AbelianGroup {
    size_t free_rank = 0;
    std::vector<int64_t> torsion;  // invariant factors > 1

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        if (free_rank > 0) {
            os << "Z";
            if (free_rank > 1) os << "^" << free_rank;
            first = false;
        }
        for (int64_t t : torsion) {
            os << (first ? "" : " + ") << "Z/" << t;
            first = false;
        }
        return os.str();
    }
};

class ChainComplexZ {
public:
    ChainComplexZ() = default;

    void set_dim(int degree, size_t dim) { dims_[degree] = dim; }
    /// Sets d_degree : C^degree -> C^{degree+1}.
    void set_differential(int degree, IntMatrix d) { diffs_[degree] = std::move(d); }

    size_t dim(int degree) const {
        auto it = dims_.find(degree);
        return it == dims_.end() ? 0 : it->second;
    }
    const std::map<int, size_t>& dims() const { return dims_; }

    IntMatrix differential(int degree) const {
        auto it = diffs_.find(degree);
        if (it != diffs_.end()) return it->second;
        return IntMatrix(dim(degree + 1), dim(degree));
    }

    std::vector<int> degrees() const {
        std::vector<int> out;
        for (auto& [k, n] : dims_)
            if (n > 0) out.push_back(k);
        return out;
    }

    /// Shapes consistent and d_{k+1} d_k = 0.
    void validate(bool over_f2 = false) const {
        for (auto& [k, d] : diffs_) {
            if (d.rows() != dim(k + 1) || d.cols() != dim(k))
                throw InvalidComplex("differential shape mismatch at degree " + std::to_string(k));
        }
        for (auto& [k, d] : diffs_) {
            auto next = diffs_.find(k + 1);
            if (next == diffs_.end()) continue;
            IntMatrix dd = next->second * d;
            for (size_t i = 0; i < dd.rows(); ++i)
                for (size_t j = 0; j < dd.cols(); ++j) {
                    int64_t v = dd(i, j);
                    if (over_f2 ? (v % 2 != 0) : (v != 0))
                        throw InvalidComplex("d^2 != 0 at degree " + std::to_string(k));
                }
        }
    }

private:
    std::map<int, size_t> dims_;
    std::map<int, IntMatrix> diffs_;
};

/// H^degree over Z.
inline AbelianGroup homology(const ChainComplexZ& C, int degree) {
    const size_t n = C.dim(degree);
    IntMatrix out = C.differential(degree);
    IntMatrix in = C.differential(degree - 1);
    size_t r_out = out.empty() ? 0 : rank(out);
    AbelianGroup g;
    std::vector<int64_t> factors;
    if (!in.empty()) factors = smith_normal_form(in, false).diagonal;
    size_t r_in = factors.size();
    g.free_rank = n - r_out - r_in;
    for (int64_t f : factors)
        if (f > 1) g.torsion.push_back(f);
    return g;
}

/// dim H^degree over F2.
inline size_t homology_f2(const ChainComplexZ& C, int degree) {
    const size_t n = C.dim(degree);
    IntMatrix out = C.differential(degree);
    IntMatrix in = C.differential(degree - 1);
    size_t r_out = out.empty() ? 0 : rank_f2(out);
    size_t r_in = in.empty() ? 0 : rank_f2(in);
    return n - r_out - r_in;
}

inline std::map<int, AbelianGroup> all_homology(const ChainComplexZ& C) {
    C.validate();
    std::map<int, AbelianGroup> out;
    for (int k : C.degrees()) out[k] = homology(C, k);
    return out;
}

inline bool is_acyclic(const ChainComplexZ& C) {
    C.validate();
    for (int k : C.degrees())
        if (!homology(C, k).is_zero()) return false;
    return true;
}

inline bool is_acyclic_f2(const ChainComplexZ& C) {
    C.validate(true);
    for (int k : C.degrees())
        if (homology_f2(C, k) != 0) return false;
    return true;
}

/// A degree-0 chain map f : A -> B, f_k : A^k -> B^k.
struct ChainMap {
    const ChainComplexZ* source = nullptr;
    const ChainComplexZ* target = nullptr;
    std::map<int, IntMatrix> components;

    IntMatrix at(int k) const {
        auto it = components.find(k);
        if (it != components.end()) return it->second;
        return IntMatrix(target->dim(k), source->dim(k));
    }
};

inline void check_chain_map(const ChainMap& f) {
    std::vector<int> ks = f.source->degrees();
    for (int k : f.target->degrees()) ks.push_back(k);
    for (int k : ks) {
        IntMatrix fk = f.at(k);
        if (fk.rows() != f.target->dim(k) || fk.cols() != f.source->dim(k))
            throw InvalidComplex("chain map shape mismatch at degree " + std::to_string(k));
        IntMatrix lhs = f.target->differential(k) * fk;
        IntMatrix rhs = f.at(k + 1) * f.source->differential(k);
        if (!(lhs == rhs)) throw InvalidComplex("not a chain map at degree " + std::to_string(k));
    }
}

/// Cone(f)^k = A^{k+1} (+) B^k with d(a, b) = (-d_A a, f a + d_B b).
inline ChainComplexZ mapping_cone(const ChainMap& f) {
    ChainComplexZ cone;
    std::vector<int> ks;
    for (int k : f.source->degrees()) ks.push_back(k - 1);
    for (int k : f.target->degrees()) ks.push_back(k);
    if (ks.empty()) return cone;
    int lo = *std::min_element(ks.begin(), ks.end()), hi = *std::max_element(ks.begin(), ks.end());
    for (int k = lo; k <= hi + 1; ++k) cone.set_dim(k, f.source->dim(k + 1) + f.target->dim(k));
    for (int k = lo; k <= hi; ++k) {
        size_t a0 = f.source->dim(k + 1), b0 = f.target->dim(k);
        size_t a1 = f.source->dim(k + 2), b1 = f.target->dim(k + 1);
        IntMatrix d(a1 + b1, a0 + b0);
        IntMatrix dA = f.source->differential(k + 1);
        IntMatrix dB = f.target->differential(k);
        IntMatrix fk = f.at(k + 1);
        for (size_t i = 0; i < a1; ++i)
            for (size_t j = 0; j < a0; ++j) d(i, j) = -dA(i, j);
        for (size_t i = 0; i < b1; ++i) {
            for (size_t j = 0; j < a0; ++j) d(a1 + i, j) = fk(i, j);
            for (size_t j = 0; j < b0; ++j) d(a1 + i, a0 + j) = dB(i, j);
        }
        cone.set_differential(k, std::move(d));
    }
    return cone;
}

struct QuasiIsoReport {
    bool quasi_iso = false;
    std::map<int, AbelianGroup> source_homology, target_homology, cone_homology;
};

/// f is a quasi-isomorphism iff its mapping cone is acyclic.
inline QuasiIsoReport is_quasi_iso(const ChainMap& f) {
    f.source->validate();
    f.target->validate();
    check_chain_map(f);
    QuasiIsoReport r;
    r.source_homology = all_homology(*f.source);
    r.target_homology = all_homology(*f.target);
    ChainComplexZ cone = mapping_cone(f);
    r.cone_homology = all_homology(cone);
    r.quasi_iso = true;
    for (auto& [k, h] : r.cone_homology)
        if (!h.is_zero()) r.quasi_iso = false;
    return r;
}

/// For a subcomplex inclusion given by `inclusion` (a chain map whose
/// components are coordinate embeddings), true iff H(sub) -> H(big) is zero:
/// every cycle of the subcomplex bounds in the larger complex.
inline bool classes_die(const ChainMap& inclusion) {
    check_chain_map(inclusion);
    for (int k : inclusion.source->degrees()) {
        IntMatrix cycles = kernel_basis(inclusion.source->differential(k));
        IntMatrix boundaries = inclusion.target->differential(k - 1);
        IntMatrix ik = inclusion.at(k);
        for (size_t c = 0; c < cycles.cols(); ++c) {
            std::vector<int64_t> img = ik.apply(cycles.column(c));
            if (!in_lattice(boundaries, img)) return false;
        }
    }
    return true;
}

}  // namespace pogcat
