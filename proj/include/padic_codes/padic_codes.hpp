#pragma once

#include "padic_codes/rational.hpp"
#include "padic_codes/prime.hpp"
#include "padic_codes/valuation.hpp"
#include "padic_codes/padic_vector.hpp"
#include "padic_codes/code.hpp"
#include "padic_codes/code_io.hpp"
#include "padic_codes/graph.hpp"
#include "padic_codes/max_clique.hpp"
#include "padic_codes/residue_graph.hpp"
#include "padic_codes/oracle.hpp"
#include "padic_codes/search.hpp"
#include "padic_codes/simplex.hpp"
#include "padic_codes/certificate.hpp"
#include "padic_codes/certificate_io.hpp"
#include "padic_codes/polynomial.hpp"
#include "padic_codes/gegenbauer.hpp"
#include "padic_codes/classical.hpp"
#include "padic_codes/report.hpp"
