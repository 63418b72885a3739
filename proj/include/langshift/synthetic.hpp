#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>

namespace langshift {

/// Shape of a generated cross-posting dataset. Target-platform comments draw
/// content words from a target vocabulary, except that a fraction
/// (`before_borrow` / `after_borrow`) is borrowed from the source
/// community's vocabulary.
struct FixtureOptions {
    std::size_t n_videos = 100;
    std::size_t source_comments = 2000;
    std::size_t before_comments = 4000;
    std::size_t after_comments = 4000;
    double before_borrow = 0.05;
    double after_borrow = 0.30;
    std::uint64_t seed = 20210601;
};

struct FixtureFiles {
    std::filesystem::path posts;
    std::filesystem::path source_comments;
    std::filesystem::path target_comments;
    std::filesystem::path videos;
    /// Run configuration pointing at the files above; output goes to `out/`.
    std::filesystem::path config;
};

/// Writes a deterministic fixture into `dir`. Besides the requested comments
/// it adds comments past the window, one video referenced twice, one video
/// without metadata, and one malformed post line.
FixtureFiles write_fixture(const std::filesystem::path& dir, const FixtureOptions& options = {});

} // namespace langshift
