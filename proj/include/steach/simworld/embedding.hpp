#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Core>

namespace steach::simworld {

using FaceEmbedding = Eigen::VectorXd;  // 128-dim unit vector

inline constexpr int kEmbeddingDim = 128;

double cosine_similarity(const FaceEmbedding& a, const FaceEmbedding& b);

// Stand-in for a face-embedding network: each identity has a fixed unit base
// vector (pairwise |cosine| < 0.3 enforced by seeded rejection), and samples
// are seeded Gaussian perturbations of the base, re-normalized.
class FaceEmbeddingSim {
public:
    explicit FaceEmbeddingSim(std::uint64_t base_seed = kDefaultBaseSeed,
                              double perturb_sigma = 0.02);

    void register_identity(std::uint32_t identity);
    bool is_registered(std::uint32_t identity) const;

    // base vector; throws on unregistered identity
    const FaceEmbedding& base(std::uint32_t identity) const;

    // base + sigma * gaussian, unit-normalized; zero sigma returns the base
    FaceEmbedding sample(std::uint32_t identity, std::uint64_t noise_seed) const;
    FaceEmbedding sample(std::uint32_t identity, std::uint64_t noise_seed,
                         double sigma) const;

    double perturb_sigma() const { return sigma_; }

    static constexpr std::uint64_t kDefaultBaseSeed = 0xFACE5EEDULL;

private:
    std::uint64_t base_seed_;
    double sigma_;
    std::map<std::uint32_t, FaceEmbedding> bases_;
};

// Identity id space: scene persons use [0, 1000), the negatives pool uses
// [1000, 1000 + pool identities).
inline constexpr std::uint32_t kPoolIdentityBase = 1000;

// Fixture pool of negative-class embeddings: `count` samples drawn from
// `identities` distinct synthetic people, fixed seed.
std::vector<FaceEmbedding> make_negatives_pool(FaceEmbeddingSim& sim,
                                               std::size_t count = 6000,
                                               std::size_t identities = 200,
                                               std::uint64_t seed = 0xBA5E);

}  // namespace steach::simworld
