// include/braidcert/braidcert.hpp — umbrella header.

#pragma once

#include "braidcert/blocks.hpp"
#include "braidcert/burau.hpp"
#include "braidcert/certify.hpp"
#include "braidcert/dynnikov.hpp"
#include "braidcert/examples.hpp"
#include "braidcert/garside.hpp"
#include "braidcert/linking.hpp"
#include "braidcert/rank.hpp"
#include "braidcert/word.hpp"
#include "braidcert/word_problem.hpp"
