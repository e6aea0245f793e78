#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hjc/types.hpp"

namespace hjc {

// A classical chart evaluated on its removed half-axis (or at the origin).
class DiracStringError : public std::domain_error {
 public:
  DiracStringError(PointClass cls, const std::string& what)
      : std::domain_error(what), point_class_(cls) {}

  PointClass point_class() const noexcept { return point_class_; }

 private:
  PointClass point_class_;
};

// A quantum chart whose normalization vanishes at one or more Fock levels.
class SingularSectorError : public std::domain_error {
 public:
  SingularSectorError(std::vector<SectorEntry> entries, const std::string& what)
      : std::domain_error(what), entries_(std::move(entries)) {}

  const std::vector<SectorEntry>& entries() const noexcept { return entries_; }

 private:
  std::vector<SectorEntry> entries_;
};

// A diagonal function that is not finite at some Fock level.
class LevelError : public std::domain_error {
 public:
  LevelError(int level, const std::string& what)
      : std::domain_error(what), level_(level) {}

  int level() const noexcept { return level_; }

 private:
  int level_;
};

}  // namespace hjc
