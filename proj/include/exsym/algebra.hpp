#pragma once

#include "exsym/matq.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace exsym {

// Raised when an input is outside the supported scope (never a wrong answer).
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BracketTerm {
    int k;
    Rat c;
    bool operator==(const BracketTerm&) const = default;
};

// Antisymmetric structure tensor. Only i<j entries are stored, so bracket
// antisymmetry holds by construction.
class BracketTensor {
public:
    BracketTensor() = default;
    explicit BracketTensor(int dim) : n_(dim) {}

    int dim() const { return n_; }

    // Stores [e_i, e_j] = value (any i != j; sign handled).
    void set(int i, int j, const VecQ& value);
    void add(int i, int j, int k, const Rat& c);

    VecQ of(int i, int j) const;                 // dense [e_i, e_j]
    VecQ apply(const VecQ& x, const VecQ& y) const;
    MatQ ad(const VecQ& x) const;                // y -> [x, y]
    MatQ ad_basis(int i) const;

    bool is_zero() const { return entries_.empty(); }

    template <class F>
    void for_each(F&& f) const {                 // f(i, j, terms) over stored i<j
        for (const auto& [ij, terms] : entries_) f(ij.first, ij.second, terms);
    }

    bool operator==(const BracketTensor&) const = default;

private:
    int n_ = 0;
    std::map<std::pair<int, int>, std::vector<BracketTerm>> entries_;
};

// Metric Lie algebra with equivariant structure (D, theta).
struct Algebra {
    int dim = 0;
    std::vector<std::string> labels;
    BracketTensor bracket;
    MatQ gram, D, theta;
    bool weak = false;
};

struct CheckResult {
    std::string name;
    std::string status;  // "pass" | "fail" | "skip" | "unsupported" | "undecided"
    std::string detail;
};

struct Report {
    std::vector<CheckResult> checks;

    void add(const std::string& name, bool ok, const std::string& detail = "") {
        checks.push_back({name, ok ? "pass" : "fail", detail});
    }
    void add_status(const std::string& name, const std::string& status,
                    const std::string& detail = "") {
        checks.push_back({name, status, detail});
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (c.status == "fail") return false;
        return true;
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

// [[x,y],z] + [[y,z],x] + [[z,x],y] on basis vectors.
VecQ jacobi_defect(const BracketTensor& b, int i, int j, int k);

// Exact verification of every structure axiom. Failures are report entries,
// never exceptions. Weak algebras skip gram nondegeneracy.
Report verify_algebra(const Algebra& g);

bool is_h_graded(const Algebra& g);  // D^3 = -D

Algebra direct_sum(const Algebra& g1, const Algebra& g2);

// Does g split as the orthogonal direct sum of the two coordinate blocks
// given by `first` and its complement (both ideals, Phi-invariant)?
bool split_check(const Algebra& g, const std::vector<int>& first);

}  // namespace exsym
