#pragma once

#include <vector>

#include "branchforge/semigroup.hpp"

namespace test_corpus {

// Plane-branch semigroups used by the property tests, genus 1 to 3.
inline std::vector<std::vector<long>> valid_semigroups() {
  return {
      {2, 3},       {2, 5},       {2, 7},       {2, 9},      {3, 4},
      {3, 5},       {3, 7},       {3, 8},       {4, 5},      {4, 7},
      {4, 9},       {5, 6},       {5, 7},       {5, 8},      {4, 6, 13},
      {4, 6, 15},   {4, 6, 19},   {6, 8, 25},   {6, 9, 19},  {6, 10, 31},
      {8, 12, 26, 53},
  };
}

inline std::vector<branchforge::PuiseuxData> puiseux_corpus() {
  return {
      {2, {3}},  {2, {5}},     {3, {4}},      {3, {5}},         {4, {5}},
      {5, {6}},  {4, {6, 7}},  {4, {6, 9}},   {4, {6, 11}},     {6, {8, 9}},
      {6, {9, 10}}, {6, {10, 11}}, {8, {12, 14, 15}},
  };
}

}  // namespace test_corpus
