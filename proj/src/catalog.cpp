#include "hyperring/catalog.hpp"

namespace hyperring::catalog {

FiniteHyperring example_3_2() {
  enum : Element { o, a, b, c };
  return FiniteHyperring(
      "example_3_2", {"0", "a", "b", "c"}, o, a,
      {
          {{o}, {a}, {b}, {c}},
          {{a}, {o, b}, {a, c}, {b}},
          {{b}, {a, c}, {o, b}, {a}},
          {{c}, {b}, {a}, {o}},
      },
      {
          {o, o, o, o},
          {o, a, b, c},
          {o, b, b, o},
          {o, c, o, c},
      });
}

FiniteHyperring krasner_k2() {
  return FiniteHyperring("krasner_k2", {"0", "1"}, 0, 1,
                         {{{0}, {1}}, {{1}, {0, 1}}}, {{0, 0}, {0, 1}});
}

FiniteHyperring sign_hyperfield() {
  enum : Element { o, p, m };
  return FiniteHyperring("sign_hyperfield", {"0", "1", "-1"}, o, p,
                         {
                             {{o}, {p}, {m}},
                             {{p}, {p}, {o, p, m}},
                             {{m}, {o, p, m}, {m}},
                         },
                         {
                             {o, o, o},
                             {o, p, m},
                             {o, m, p},
                         });
}

FiniteHyperring z_mod(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::vector<FiniteHyperring::AddCell>> add(
      n, std::vector<FiniteHyperring::AddCell>(n));
  std::vector<std::vector<Element>> mul(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back(std::to_string(x));
    for (std::size_t y = 0; y < n; ++y) {
      add[x][y] = {(x + y) % n};
      mul[x][y] = (x * y) % n;
    }
  }
  return FiniteHyperring(n == 4 ? "z4_classical" : "z" + std::to_string(n),
                         std::move(labels), 0, n > 1 ? 1 : 0, add, mul);
}

}  // namespace hyperring::catalog
