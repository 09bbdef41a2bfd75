#ifndef BLUNDON_CENTERS_HPP
#define BLUNDON_CENTERS_HPP

// Named triangle centers and Cevian points of rank (k, l, m).
//
// Spec strings (case-insensitive):
//   incenter | centroid | nagel | lemoine | excenter:A|B|C | adjnagel:A|B|C
//   | cevian:k,l,m | raw:t1,t2,t3

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <variant>

#include "blundon/error.hpp"
#include "blundon/kernel.hpp"
#include "blundon/numeric_text.hpp"
#include "blundon/scalar.hpp"

namespace blundon {

enum class Vertex { A = 0, B = 1, C = 2 };

inline char vertex_name(Vertex v) { return "ABC"[static_cast<int>(v)]; }

namespace center {

struct Incenter {};
struct Centroid {};
struct Nagel {};
struct Lemoine {};
struct Excenter {
  Vertex vertex;
};
struct AdjointNagel {
  Vertex vertex;
};
template <Scalar T>
struct CevianRank {
  T k, l, m;
};
template <Scalar T>
struct Raw {
  T t1, t2, t3;
};

}  // namespace center

template <Scalar T>
using CenterSpec = std::variant<center::Incenter, center::Centroid, center::Nagel, center::Lemoine,
                                center::Excenter, center::AdjointNagel, center::CevianRank<T>,
                                center::Raw<T>>;

namespace detail {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

inline std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return out;
}

inline Vertex parse_vertex(std::string_view text, std::string_view whole) {
  const std::string v = lowercase(trim(text));
  if (v == "a") return Vertex::A;
  if (v == "b") return Vertex::B;
  if (v == "c") return Vertex::C;
  throw GeometryError(ErrorKind::InvalidCenterSpec,
                      "vertex must be A, B or C in '" + std::string(whole) + "'");
}

}  // namespace detail

template <Scalar T>
CenterSpec<T> parse_center_spec(std::string_view text) {
  const std::string whole(text);
  const std::string lowered = detail::lowercase(detail::trim(text));
  const auto colon = lowered.find(':');
  const std::string head = lowered.substr(0, colon);
  const std::string_view args =
      colon == std::string::npos ? std::string_view{} : std::string_view(lowered).substr(colon + 1);
  const bool has_args = colon != std::string::npos;

  auto no_args = [&](auto tag) -> CenterSpec<T> {
    if (has_args) {
      throw GeometryError(ErrorKind::InvalidCenterSpec, "'" + head + "' takes no arguments");
    }
    return tag;
  };

  if (head == "incenter") return no_args(center::Incenter{});
  if (head == "centroid") return no_args(center::Centroid{});
  if (head == "nagel") return no_args(center::Nagel{});
  if (head == "lemoine") return no_args(center::Lemoine{});
  if (head == "excenter" && has_args) return center::Excenter{detail::parse_vertex(args, whole)};
  if (head == "adjnagel" && has_args) return center::AdjointNagel{detail::parse_vertex(args, whole)};
  if (head == "cevian" && has_args) {
    const auto v = parse_number_list<T>(args, 3);
    return center::CevianRank<T>{v[0], v[1], v[2]};
  }
  if (head == "raw" && has_args) {
    const auto v = parse_number_list<T>(args, 3);
    return center::Raw<T>{v[0], v[1], v[2]};
  }
  throw GeometryError(ErrorKind::InvalidCenterSpec, "unknown center spec '" + whole + "'");
}

template <Scalar T>
std::string to_string(const CenterSpec<T>& spec) {
  auto num = [](const T& v) {
    if constexpr (FloatingScalar<T>) {
      return format_g17(static_cast<double>(v));
    } else {
      return v.str();
    }
  };
  return std::visit(
      detail::Overloaded{
          [](center::Incenter) -> std::string { return "incenter"; },
          [](center::Centroid) -> std::string { return "centroid"; },
          [](center::Nagel) -> std::string { return "nagel"; },
          [](center::Lemoine) -> std::string { return "lemoine"; },
          [](center::Excenter e) -> std::string { return std::string("excenter:") + vertex_name(e.vertex); },
          [](center::AdjointNagel e) -> std::string {
            return std::string("adjnagel:") + vertex_name(e.vertex);
          },
          [&](const center::CevianRank<T>& c) -> std::string {
            return "cevian:" + num(c.k) + "," + num(c.l) + "," + num(c.m);
          },
          [&](const center::Raw<T>& r) -> std::string {
            return "raw:" + num(r.t1) + "," + num(r.t2) + "," + num(r.t3);
          },
      },
      spec);
}

/// Rotates a triple so that the entry for vertex A lands on `v`.
template <class U>
std::array<U, 3> place_at_vertex(Vertex v, const std::array<U, 3>& for_a) {
  switch (v) {
    case Vertex::A: return for_a;
    case Vertex::B: return {for_a[2], for_a[0], for_a[1]};
    case Vertex::C: return {for_a[1], for_a[2], for_a[0]};
  }
  return for_a;
}

/// (a, b, c) rotated so that the side opposite `v` comes first.
template <Scalar T>
std::array<T, 3> sides_from_vertex(Vertex v, const TriangleSides<T>& sides) {
  switch (v) {
    case Vertex::A: return {sides.a(), sides.b(), sides.c()};
    case Vertex::B: return {sides.b(), sides.c(), sides.a()};
    case Vertex::C: return {sides.c(), sides.a(), sides.b()};
  }
  return sides.lengths();
}

template <Scalar T>
BaryPoint<T> cevian_rank_point(const T& k, const T& l, const T& m, const TriangleSides<T>& sides) {
  const T& a = sides.a();
  const T& b = sides.b();
  const T& c = sides.c();
  // s - a = (b + c - a) / 2, etc.
  auto weight = [&](const T& side, const T& s_minus, const T& others) {
    return pow_of(side, k) * pow_of(s_minus, l) * pow_of(others, m);
  };
  return BaryPoint<T>(weight(a, T((b + c - a) / 2), T(b + c)),
                      weight(b, T((c + a - b) / 2), T(a + c)),
                      weight(c, T((a + b - c) / 2), T(a + b)));
}

template <Scalar T>
BaryPoint<T> resolve(const CenterSpec<T>& spec, const TriangleSides<T>& sides) {
  const T& a = sides.a();
  const T& b = sides.b();
  const T& c = sides.c();
  return std::visit(
      detail::Overloaded{
          [&](center::Incenter) { return BaryPoint<T>(a, b, c); },
          [&](center::Centroid) { return BaryPoint<T>(T(1), T(1), T(1)); },
          [&](center::Nagel) {
            return BaryPoint<T>((b + c - a) / 2, (c + a - b) / 2, (a + b - c) / 2);
          },
          [&](center::Lemoine) { return BaryPoint<T>(a * a, b * b, c * c); },
          [&](center::Excenter e) {
            // I_a = (-a : b : c); the other two are cyclic relabelings.
            auto [x, y, z] = sides_from_vertex(e.vertex, sides);
            return BaryPoint<T>(place_at_vertex<T>(e.vertex, {T(-x), y, z}));
          },
          [&](center::AdjointNagel e) {
            // N_a = (s : c - s : b - s).
            auto [x, y, z] = sides_from_vertex(e.vertex, sides);
            const T s = sides.semiperimeter();
            return BaryPoint<T>(place_at_vertex<T>(e.vertex, {s, T(z - s), T(y - s)}));
          },
          [&](const center::CevianRank<T>& r) { return cevian_rank_point(r.k, r.l, r.m, sides); },
          [&](const center::Raw<T>& r) { return BaryPoint<T>(r.t1, r.t2, r.t3); },
      },
      spec);
}

/// Feet D, E, F of the Cevians through P on BC, CA, AB.
template <Scalar T>
std::array<BaryPoint<T>, 3> cevian_triangle(const BaryPoint<T>& p) {
  return {BaryPoint<T>(T(0), p[1], p[2]), BaryPoint<T>(p[0], T(0), p[2]),
          BaryPoint<T>(p[0], p[1], T(0))};
}

}  // namespace blundon

#endif  // BLUNDON_CENTERS_HPP
