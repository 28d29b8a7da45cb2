#include "shv/order.hpp"

namespace shv::order {

std::strong_ordering principal_compare(const DegreeTriple& x, const DegreeTriple& y, Reading reading) {
  if (reading == Reading::left_to_right) {
    if (auto c = rev_lex_compare(x.i, y.i); c != 0) return c;
    if (auto c = x.i.weight() <=> y.i.weight(); c != 0) return c;
    if (auto c = rev_lex_compare(x.j, y.j); c != 0) return c;
    if (auto c = x.j.weight() <=> y.j.weight(); c != 0) return c;
    if (auto c = rev_lex_compare(x.k, y.k); c != 0) return c;
    return x.k.weight() <=> y.k.weight();
  }
  if (auto c = x.k.weight() <=> y.k.weight(); c != 0) return c;
  if (auto c = rev_lex_compare(x.k, y.k); c != 0) return c;
  if (auto c = x.j.weight() <=> y.j.weight(); c != 0) return c;
  if (auto c = rev_lex_compare(x.j, y.j); c != 0) return c;
  if (auto c = x.i.weight() <=> y.i.weight(); c != 0) return c;
  return rev_lex_compare(x.i, y.i);
}

}  // namespace shv::order
