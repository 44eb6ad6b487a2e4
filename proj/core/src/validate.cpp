#include "simphil/validate.hpp"

namespace simphil {

ValidationReport validate(const SimplicialSet& x) {
    ValidationReport r;
    const int top = x.cutoff();
    auto record = [&](bool ok, const char* rel, int n, int i, int j, Index k) {
        ++r.checks;
        if (!ok) r.violations.push_back({rel, n, i, j, k});
    };
    for (int n = 2; n <= top; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                for (Index k = 0; k < x.size(n); ++k)
                    record(x.face(n - 1, i, x.face(n, j, k)) == x.face(n - 1, j - 1, x.face(n, i, k)), "face-face", n,
                           i, j, k);
    for (int n = 0; n + 1 <= top; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i)
                for (Index k = 0; k < x.size(n); ++k) {
                    const Index lhs = x.face(n + 1, i, x.degeneracy(n, j, k));
                    if (i < j) {
                        record(lhs == x.degeneracy(n - 1, j - 1, x.face(n, i, k)), "face-degeneracy-low", n, i, j, k);
                    } else if (i == j || i == j + 1) {
                        record(lhs == k, "face-degeneracy-id", n, i, j, k);
                    } else {
                        record(lhs == x.degeneracy(n - 1, j, x.face(n, i - 1, k)), "face-degeneracy-high", n, i, j, k);
                    }
                }
    for (int n = 0; n + 2 <= top; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                for (Index k = 0; k < x.size(n); ++k)
                    record(x.degeneracy(n + 1, i, x.degeneracy(n, j, k)) ==
                               x.degeneracy(n + 1, j + 1, x.degeneracy(n, i, k)),
                           "degeneracy-degeneracy", n, i, j, k);
    return r;
}

}  // namespace simphil
