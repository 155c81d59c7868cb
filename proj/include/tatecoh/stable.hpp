#pragma once

// Projective and free covers, Heller shifts and stable Hom.

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "tatecoh/module.hpp"

namespace tatecoh {

enum class Engine { Minimal, Free };
std::string engine_name(Engine e);
Engine parse_engine(const std::string& s);

// P = direct sum of blocks A e_t, mapped onto M by u -> u m_t on block t.
struct Cover {
  Module module;
  Module projective;
  Matrix epi;                                // module.dim x projective.dim
  std::vector<Vector> generators;            // m_t
  std::vector<Vector> idempotents;           // e_t (the unit for free blocks)
  std::vector<std::vector<Vector>> blocks;   // basis of A e_t in algebra coordinates
  std::vector<std::vector<Vector>> block_words;  // the same vectors in word coordinates
  std::vector<std::size_t> offsets;          // block t occupies [offsets[t], offsets[t+1])
  Module kernel;
  Matrix inclusion;                          // projective.dim x kernel.dim
  std::vector<std::size_t> kernel_columns;   // kernel vector -> its entries here are its coordinates
  Engine engine = Engine::Minimal;
};

Cover free_cover(const Module& m);
// Throws NotSplitCommutative when the idempotent machinery does not apply.
Cover projective_cover(const Module& m);
// Minimal engine falls back to free covers when A/J is not split commutative.
Cover make_cover(const Module& m, Engine engine);

Vector kernel_coordinates(const Cover& c, const Vector& p);
// Some p in P with epi p = m.
Vector lift_to_cover(const Cover& c, const Vector& m);
// Minimality: the kernel lies in rad P.
bool kernel_in_radical(const Cover& c);

// Omega(f) for f: X -> Y, as a map ker(cx) -> ker(cy), from a lift P_X -> P_Y.
Matrix omega_shift(const Cover& cx, const Cover& cy, const Matrix& f);

Module syzygy(const Module& m, Engine engine);
Module cosyzygy(const Module& m, Engine engine);

struct ProjectivityResult {
  bool projective = false;
  Matrix section;  // free cover dim x module dim; epi * section = id when projective
};
ProjectivityResult is_projective(const Module& m);

struct StableHom {
  Module source, target;
  std::vector<Vector> hom;              // generator-image coordinates (see hom_images)
  std::vector<Vector> projective_maps;  // basis of PHom, same coordinates
  std::vector<Vector> representatives;  // complement of PHom inside Hom

  std::size_t dim() const { return representatives.size(); }
  Matrix representative(std::size_t i) const;
  // Coordinates of the class of f with respect to the representatives.
  Vector classify(const Matrix& f) const;
  bool stably_zero(const Matrix& f) const;
};
StableHom stable_hom(const Module& m, const Module& n);

struct StripResult {
  Module module;
  std::size_t removed = 0;  // number of free rank one summands split off
  std::uint64_t seed = 0;
};
StripResult strip_free_summands(const Module& m, std::uint64_t seed = 1);

// Seed for the randomized searches run inside towers; part of the tower cache key.
void set_default_seed(std::uint64_t seed);
std::uint64_t default_seed();

// 0 -> at(n+1) -> projective -> at(n) -> 0.
struct LevelSequence {
  Module projective;
  Matrix inclusion;   // projective.dim x at(n+1).dim
  Matrix projection;  // at(n).dim x projective.dim
};

// Omega^n of a fixed module for all integers n, built lazily. Negative n means
// (Omega^{-1})^{|n|}. With the free engine each level is stripped of free summands.
class SyzygyTower {
 public:
  SyzygyTower(Module base, Engine engine, bool strip = true, std::uint64_t seed = 1);

  const Module& base() const { return base_; }
  Engine engine() const { return engine_; }
  Module at(int n);
  // Cover of at(n) for n >= 0 whose kernel is at(n+1) (only when not stripping).
  Cover cover_at(int n);
  // Any integer n; negative levels use the dual of the cover over the opposite
  // algebra (only when not stripping).
  LevelSequence sequence_at(int n);

 private:
  Module build_up(int n);
  Module build_down(int n);
  std::string cache_path(int n) const;

  Module base_;
  Engine engine_;
  bool strip_;
  std::uint64_t seed_;
  std::mutex mutex_;
  std::vector<Module> up_;    // up_[k] = Omega^k
  std::vector<Module> down_;  // down_[k] = Omega^{-k}
  std::vector<Cover> covers_;
  std::vector<LevelSequence> cocovers_;  // cocovers_[k - 1] ends in Omega^{-k}
};

// Process-wide tower cache keyed by the module and engine.
std::shared_ptr<SyzygyTower> syzygy_tower(const Module& m, Engine engine, bool strip = true);

}  // namespace tatecoh
