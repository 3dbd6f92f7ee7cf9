#ifndef QVERIFY_QVERIFY_HPP
#define QVERIFY_QVERIFY_HPP

#include "qverify/appell.hpp"
#include "qverify/catalog.hpp"
#include "qverify/cyclotomic.hpp"
#include "qverify/dn.hpp"
#include "qverify/errors.hpp"
#include "qverify/eval.hpp"
#include "qverify/expr.hpp"
#include "qverify/hecke.hpp"
#include "qverify/mock.hpp"
#include "qverify/monomial.hpp"
#include "qverify/series.hpp"
#include "qverify/theta.hpp"

#endif
