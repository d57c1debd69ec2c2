#include "xreal/permutation.hpp"

#include "xreal/error.hpp"

namespace xreal {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t v : images_) {
        if (v >= images_.size() || seen[v]) {
            throw InvalidArgument("not a permutation: " + to_string());
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n)
{
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) {
        images[i] = i;
    }
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept
{
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) {
            return false;
        }
    }
    return true;
}

Permutation Permutation::inverse() const
{
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        inv[images_[i]] = i;
    }
    return Permutation(std::move(inv));
}

std::string Permutation::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        out += (i ? ", " : "") + std::to_string(images_[i]);
    }
    return out + "]";
}

Permutation compose(const Permutation& s, const Permutation& t)
{
    if (s.size() != t.size()) {
        throw PermutationArityError("cannot compose permutations on " + std::to_string(s.size()) +
                                    " and " + std::to_string(t.size()) + " letters");
    }
    std::vector<std::size_t> images(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        images[i] = s(t(i));
    }
    return Permutation(std::move(images));
}

} // namespace xreal
