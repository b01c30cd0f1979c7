#pragma once

#include <Eigen/Dense>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace surftrack {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Quat = Eigen::Quaterniond;

enum class Err {
  DegenerateFace,
  NonManifoldEdge,
  BoundaryEdge,
  NonConvexQuad,
  InvalidLayout,
  SingularCovariance,
  ResolutionMismatch,
  NonFiniteLoss,
  StaleState,
  EmptyInput,
  NoSurface,
  NoOverlap,
  StitchFailure,
  EmptyMesh,
  LengthMismatch,
  InvalidScript,
  IoError,
  ConfigError,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::DegenerateFace: return "DegenerateFace";
    case Err::NonManifoldEdge: return "NonManifoldEdge";
    case Err::BoundaryEdge: return "BoundaryEdge";
    case Err::NonConvexQuad: return "NonConvexQuad";
    case Err::InvalidLayout: return "InvalidLayout";
    case Err::SingularCovariance: return "SingularCovariance";
    case Err::ResolutionMismatch: return "ResolutionMismatch";
    case Err::NonFiniteLoss: return "NonFiniteLoss";
    case Err::StaleState: return "StaleState";
    case Err::EmptyInput: return "EmptyInput";
    case Err::NoSurface: return "NoSurface";
    case Err::NoOverlap: return "NoOverlap";
    case Err::StitchFailure: return "StitchFailure";
    case Err::EmptyMesh: return "EmptyMesh";
    case Err::LengthMismatch: return "LengthMismatch";
    case Err::InvalidScript: return "InvalidScript";
    case Err::IoError: return "IoError";
    case Err::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& msg)
      : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }
inline double logit(double p) { return std::log(p / (1.0 - p)); }

// Global worker count. 0 = hardware concurrency. Deterministic runs pin 1.
inline std::atomic<int>& num_threads_ref() {
  static std::atomic<int> n{0};
  return n;
}
inline void set_num_threads(int n) { num_threads_ref().store(n); }
inline int num_threads() {
  int n = num_threads_ref().load();
  if (n > 0) return n;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Chunked parallel map over [0, n). fn(begin, end) must only write to
// disjoint state per index; chunk boundaries are deterministic.
template <typename Fn>
void parallel_chunks(std::int64_t n, Fn&& fn) {
  int workers = num_threads();
  if (n <= 0) return;
  if (workers <= 1 || n < 256) {
    fn(std::int64_t(0), n);
    return;
  }
  workers = static_cast<int>(std::min<std::int64_t>(workers, n));
  std::int64_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    std::int64_t b = w * chunk;
    std::int64_t e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& t : pool) t.join();
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : gen_(seed) {}
  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  double normal(double mean = 0.0, double stddev = 1.0) {
    return std::normal_distribution<double>(mean, stddev)(gen_);
  }
  int uniform_int(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }
  std::uint64_t next() { return gen_(); }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace surftrack
