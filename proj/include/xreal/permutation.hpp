#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace xreal {

/// An element of S_n acting on variable positions 0..n-1, sigma(i) = images[i].
class Permutation {
public:
    Permutation() = default;
    /// Throws InvalidArgument unless `images` is a bijection on 0..n-1.
    explicit Permutation(std::vector<std::size_t> images);
    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return images_.size(); }
    std::size_t operator()(std::size_t i) const { return images_.at(i); }
    const std::vector<std::size_t>& images() const noexcept { return images_; }
    bool is_identity() const noexcept;

    Permutation inverse() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    std::string to_string() const;

private:
    std::vector<std::size_t> images_;
};

/// (s o t)(i) = s(t(i)). Permuting variables by t and then by s is the same
/// as permuting once by s o t.
Permutation compose(const Permutation& s, const Permutation& t);

} // namespace xreal
