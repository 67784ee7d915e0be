#pragma once

// Registry pieces shared by the harness translation units.

#include <string>
#include <vector>

#include "rlat/harness.hpp"

namespace rlat::detail {

inline Elem E(std::size_t i) { return static_cast<Elem>(i); }

std::string show(const Algebra& a, ElementSet s);
std::string show(const Algebra& a, Elem x);

/// Appends "what at witness" unless `what` was already reported.
class Reporter {
 public:
  explicit Reporter(Failures& out) : out_(out) {}
  void fail(const std::string& what, const std::string& where);
  void expect(bool ok, const std::string& what, const std::string& where = "") {
    if (!ok) fail(what, where);
  }

 private:
  Failures& out_;
  std::vector<std::string> seen_;
};

void add_core_theorems(std::vector<Theorem>& out);
void add_blp_theorems(std::vector<Theorem>& out);
void add_structure_theorems(std::vector<Theorem>& out);
void add_product_theorems(std::vector<Theorem>& out);

}  // namespace rlat::detail
