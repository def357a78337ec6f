#ifndef FERMAT_FORMS_HPP
#define FERMAT_FORMS_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace fermat {

/// Index (r, s) of the normalized holomorphic form
/// omega_{r,s} = N x^{r-1} y^{s-1} dx / (y^{N-1} B(r/N, s/N)) on F(N).
struct FormIdx {
    int n = 0;
    int r = 0;
    int s = 0;

    static bool valid(int n, int r, int s) { return n >= 3 && r >= 1 && s >= 1 && r + s <= n - 1; }

    /// Throws std::invalid_argument citing the index constraint.
    static FormIdx make(int n, int r, int s) {
        if (!valid(n, r, s))
            throw std::invalid_argument("invalid form index (r,s)=(" + std::to_string(r) + "," + std::to_string(s) +
                                        ") for N=" + std::to_string(n) + ": require r,s >= 1 and r+s <= N-1");
        return {n, r, s};
    }

    friend auto operator<=>(const FormIdx&, const FormIdx&) = default;
};

/// All valid form indices for degree n, lexicographic in (r, s).
inline std::vector<FormIdx> all_forms(int n) {
    std::vector<FormIdx> out;
    for (int r = 1; r <= n - 2; ++r)
        for (int s = 1; r + s <= n - 1; ++s) out.push_back({n, r, s});
    return out;
}

}  // namespace fermat

#endif  // FERMAT_FORMS_HPP
