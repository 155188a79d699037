// Shared helpers for the unit tests.

#pragma once

#include <fstream>
#include <stdexcept>

#include "qtorus/json_io.hpp"

namespace qtest {

using qtorus::json;

/// Reference values written by tests/oracle/make_oracle.py.
inline const json& oracle() {
  static const json data = [] {
    std::ifstream in(QTORUS_ORACLE_PATH);
    if (!in) throw std::runtime_error("cannot open " QTORUS_ORACLE_PATH);
    return json::parse(in);
  }();
  return data;
}

inline qtorus::CycloElement element(const json& j, int r) {
  return qtorus::cyclo_from_json(qtorus::CycloContext::get(r), j);
}

inline qtorus::CycloElement integer(int r, long n) {
  return qtorus::CycloElement::integer(qtorus::CycloContext::get(r), n);
}

}  // namespace qtest
