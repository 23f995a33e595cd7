#include "nnoracle/subject.hpp"

#include <stdexcept>

namespace nno::subject {

bool in_domain(const CustomerRecord& x) {
  const std::array<int, 8> f = {x.citizenship, x.state,   x.region,     x.sex,
                                x.age,         x.marital, x.dependents, x.income};
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] < 0 || f[i] > kFieldMax[i]) return false;
  return true;
}

static void require_in_domain(const CustomerRecord& x) {
  if (!in_domain(x)) throw std::domain_error("subject: record field out of range");
}

static Decision decide(int amount) { return {amount != 0, amount}; }

// Reference listing. The (int) casts truncate toward zero, exactly as in the
// original source; amounts stay non-negative so this equals floor.
Decision approve(const CustomerRecord& x) {
  require_in_domain(x);
  int amount = 0;
  if (x.region == 5 || x.region == 6)
    amount = 0;
  else if (x.age < 18)
    amount = 0;
  else {
    if (x.citizenship == 0) {
      amount = 5000 + 1000 * x.income;
      if (x.state == 0)
        if (x.region == 3 || x.region == 4)
          amount = amount * 2;
        else
          amount = static_cast<int>(amount * 1.50);
      else
        amount = static_cast<int>(amount * 1.10);
      if (x.marital == 0)
        if (x.dependents > 0)
          amount = amount + 200 * x.dependents;
        else
          amount = amount + 500;
      else
        amount = amount + 1000;
      if (x.sex == 0)
        amount = amount + 500;
      else
        amount = amount + 1000;
    } else {
      amount = 1000 + 800 * x.income;
      if (x.marital == 0)
        if (x.dependents > 2)
          amount = amount + 100 * x.dependents;
        else
          amount = amount + 100;
      else
        amount = amount + 300;
      if (x.sex == 0)
        amount = amount + 100;
      else
        amount = amount + 200;
    }
  }
  return decide(amount);
}

// The 21 mutants are kept as explicit full copies of the routine, each with
// a single predicate replaced, so that every variant can be eyeballed
// against the published mutation table. The mutated line is marked.

namespace {

Decision mutant1(const CustomerRecord& x) {
  int amount = 0;
  if (x.region == 5)  // M1, line 2
    amount = 0;
  else if (x.age < 18)
    amount = 0;
  else {
    if (x.citizenship == 0) {
      amount = 5000 + 1000 * x.income;
      if (x.state == 0)
        if (x.region == 3 || x.region == 4)
          amount = amount * 2;
        else
          amount = static_cast<int>(amount * 1.50);
      else
        amount = static_cast<int>(amount * 1.10);
      if (x.marital == 0)
        if (x.dependents > 0)
          amount = amount + 200 * x.dependents;
        else
          amount = amount + 500;
      else
        amount = amount + 1000;
      if (x.sex == 0)
        amount = amount + 500;
      else
        amount = amount + 1000;
    } else {
      amount = 1000 + 800 * x.income;
      if (x.marital == 0)
        if (x.dependents > 2)
          amount = amount + 100 * x.dependents;
        else
          amount = amount + 100;
      else
        amount = amount + 300;
      if (x.sex == 0)
        amount = amount + 100;
      else
        amount = amount + 200;
    }
  }
  return decide(amount);
}

Decision mutant2(const CustomerRecord& x) {
  int amount = 0;
  if (x.region == 5 && x.region == 6)  // M2, line 2
    amount = 0;
  else if (x.age < 18)
    amount = 0;
  else {
    if (x.citizenship == 0) {
      amount = 5000 + 1000 * x.income;
      if (x.state == 0)
        if (x.region == 3 || x.region == 4)
          amount = amount * 2;
        else
          amount = static_cast<int>(amount * 1.50);
      else
        amount = static_cast<int>(amount * 1.10);
      if (x.marital == 0)
        if (x.dependents > 0)
          amount = amount + 200 * x.dependents;
        else
          amount = amount + 500;
      else
        amount = amount + 1000;
      if (x.sex == 0)
        amount = amount + 500;
      else
        amount = amount + 1000;
    } else {
      amount = 1000 + 800 * x.income;
      if (x.marital == 0)
        if (x.dependents > 2)
          amount = amount + 100 * x.dependents;
        else
          amount = amount + 100;
      else
        amount = amount + 300;
      if (x.sex == 0)
        amount = amount + 100;
      else
        amount = amount + 200;
    }
  }
  return decide(amount);
}

Decision mutant3(const CustomerRecord& x) {
  int amount = 0;
  if (x.region == 4 || x.region == 5)  // M3, line 2
    amount = 0;
  else if (x.age < 18)
    amount = 0;
  else {
    if (x.citizenship == 0) {
      amount = 5000 + 1000 * x.income;
      if (x.state == 0)
        if (x.region == 3 || x.region == 4)
          amount = amount * 2;
        else
          amount = static_cast<int>(amount * 1.50);
      else
        amount = static_cast<int>(amount * 1.10);
      if (x.marital == 0)
        if (x.dependents > 0)
          amount = amount + 200 * x.dependents;
        else
          amount = amount + 500;
      else
        amount = amount + 1000;
      if (x.sex == 0)
        amount = amount + 500;
      else
        amount = amount + 1000;
    } else {
      amount = 1000 + 800 * x.income;
      if (x.marital == 0)
        if (x.dependents > 2)
          amount = amount + 100 * x.dependents;
        else
          amount = amount + 100;
      else
        amount = amount + 300;
      if (x.sex == 0)
        amount = amount + 100;
      else
        amount = amount + 200;
    }
  }
  return decide(amount);
}

Decision mutant4(const CustomerRecord& x) {
  int amount = 0;
  if (x.region == 3 || x.region == 4)  // M4, line 2
    amount = 0;
  else if (x.age < 18)
    amount = 0;
  else {
    if (x.citizenship == 0) {
      amount = 5000 + 1000 * x.income;
      if (x.state == 0)
        if (x.region == 3 || x.region == 4)
          amount = amount * 2;
        else
          amount = static_cast<int>(amount * 1.50);
      else
        amount = static_cast<int>(amount * 1.10);
      if (x.marital == 0)
        if (x.dependents > 0)
          amount = amount + 200 * x.dependents;
        else
          amount = amount + 500;
      else
        amount = amount + 1000;
      if (x.sex == 0)
        amount = amount + 500;
      else
        amount = amount + 1000;
    } else {
      amount = 1000 + 800 * x.income;
      if (x.marital == 0)
        if (x.dependents > 2)
          amount = amount + 100 * x.dependents;
        else
          amount = amount + 100;
      else
        amount = amount + 300;
      if (x.sex == 0)
        amount = amount + 100;
      else
        amount = amount + 200;
    }
  }
  return decide(amount);
}

Decision mutant5(const CustomerRecord& x) {
  int amount = 0;
  if (x.region == 5 || x.region == 6)
    amount = 0;
  else if (x.age > 18)  // M5, line 3
    amount = 0;
  else {
    if (x.citizenship == 0) {
      amount = 5000 + 1000 * x.income;
      if (x.state == 0)
        if (x.region == 3 || x.region == 4)
          amount = amount * 2;
        else
          amount = static_cast<int>(amount * 1.50);
      else
        amount = static_cast<int>(amount * 1.10);
      if (x.marital == 0)
        if (x.dependents > 0)
          amount = amount + 200 * x.dependents;
        else
          amount = amount + 500;
      else
        amount = amount + 1000;
      if (x.sex == 0)
        amount = amount + 500;
      else
        amount = amount + 1000;
    } else {
      amount = 1000 + 800 * x.income;
      if (x.marital == 0)
        if (x.dependents > 2)
          amount = amount + 100 * x.dependents;
        else
          amount = amount + 100;
      else
        amount = amount + 300;
      if (x.sex == 0)
        amount = amount + 100;
      else
        amount = amount + 200;
    }
  }
  return decide(amount);
}

Decision mutant6(const CustomerRecord& x) {
  int amount = 0;
  if (x.region == 5 || x.region == 6)
    amount = 0;
  else if (x.age < 25)  // M6, line 3
    amount = 0;
  else {
    if (x.citizenship == 0) {
      amount = 5000 + 1000 * x.income;
      if (x.state == 0)
        if (x.region == 3 || x.region == 4)
          amount = amount * 2;
        else
          amount = static_cast<int>(amount * 1.50);
      else
        amount = static_cast<int>(amount * 1.10);
      if (x.marital == 0)
        if (x.dependents > 0)
          amount = amount + 200 * x.dependents;
        else
          amount = amount + 500;
      else
        amount = amount + 1000;
      if (x.sex == 0)
        amount = amount + 500;
      else
        amount = amount + 1000;
    } else {
      amount = 1000 + 800 * x.income;
      if (x.marital == 0)
        if (x.dependents > 2)
          amount = amount + 100 * x.dependents;
        else
          amount = amount + 100;
      else
        amount = amount + 300;
      if (x.sex == 0)
        amount = amount + 100;
      else
        amount = amount + 200;
    }
  }
  return decide(amount);
}

Decision mutant7(const CustomerRecord& x) {
  int amount = 0;
  if (x.region == 5 || x.region == 6)
    amount = 0;
  else if (x.age < 18)
    amount = 0;
  else {
    if (x.citizenship == 1) {  // M7, line 5
      amount = 5000 + 1000 * x.income;
      if (x.state == 0)
        if (x.region == 3 || x.region == 4)
          amount = amount * 2;
        else
          amount = static_cast<int>(amount * 1.50);
      else
        amount = static_cast<int>(amount * 1.10);
      if (x.marital == 0)
        if (x.dependents > 0)
          amount = amount + 200 * x.dependents;
        else
          amount = amount + 500;
      else
        amount = amount + 1000;
      if (x.sex == 0)
        amount = amount + 500;
      else
        amount = amount + 1000;
    } else {
      amount = 1000 + 800 * x.income;
      if (x.marital == 0)
        if (x.dependents > 2)
          amount = amount + 100 * x.dependents;
        else
          amount = amount + 100;
      else
        amount = amount + 300;
      if (x.sex == 0)
        amount = amount + 100;
      else
        amount = amount + 200;
    }
  }
  return decide(amount);
}

Decision mutant8(const CustomerRecord& x) {
  int amount = 0;
  if (x.region == 5 || x.region == 6)
    amount = 0;
  else if (x.age < 18)
    amount = 0;
  else {
    if (x.citizenship == 0) {
      amount = 5000 + 1000 * x.income;
      if (x.state == 1)  // M8, line 7
        if (x.region == 3 || x.region == 4)
          amount = amount * 2;
        else
          amount = static_cast<int>(amount * 1.50);
      else
        amount = static_cast<int>(amount * 1.10);
      if (x.marital == 0)
        if (x.dependents > 0)
          amount = amount + 200 * x.dependents;
        else
          amount = amount + 500;
      else
        amount = amount + 1000;
      if (x.sex == 0)
        amount = amount + 500;
      else
        amount = amount + 1000;
    } else {
      amount = 1000 + 800 * x.income;
      if (x.marital == 0)
        if (x.dependents > 2)
          amount = amount + 100 * x.dependents;
        else
          amount = amount + 100;
      else
        amount = amount + 300;
      if (x.sex == 0)
        amount = amount + 100;
      else
        amount = amount + 200;
    }
  }
  return decide(amount);
}

Decision mutant9(const CustomerRecord& x) {
  int amount = 0;
  if (x.region == 5 || x.region == 6)
    amount = 0;
  else if (x.age < 18)
    amount = 0;
  else {
    if (x.citizenship == 0) {
      amount = 5000 + 1000 * x.income;
      if (x.state == 0)
        if (x.region == 3)  // M9, line 8
          amount = amount * 2;
        else
          amount = static_cast<int>(amount * 1.50);
      else
        amount = static_cast<int>(amount * 1.10);
      if (x.marital == 0)
        if (x.dependents > 0)
          amount = amount + 200 * x.dependents;
        else
          amount = amount + 500;
      else
        amount = amount + 1000;
      if (x.sex == 0)
        amount = amount + 500;
      else
        amount = amount + 1000;
    } else {
      amount = 1000 + 800 * x.income;
      if (x.marital == 0)
        if (x.dependents > 2)
          amount = amount + 100 * x.dependents;
        else
          amount = amount + 100;
      else
        amount = amount + 300;
      if (x.sex == 0)
        amount = amount + 100;
      else
        amount = amount + 200;
    }
  }
  return decide(amount);
}

Decision mutant10(const CustomerRecord& x) {
  int amount = 0;
  if (x.region == 5 || x.region == 6)
    amount = 0;
  else if (x.age < 18)
    amount = 0;
  else {
    if (x.citizenship == 0) {
      amount = 5000 + 1000 * x.income;
      if (x.state == 0)
        if (x.region == 3 && x.region == 4)  // M10, line 8
          amount = amount * 2;
        else
          amount = static_cast<int>(amount * 1.50);
      else
        amount = static_cast<int>(amount * 1.10);
      if (x.marital == 0)
        if (x.dependents > 0)
          amount = amount + 200 * x.dependents;
        else
          amount = amount + 500;
      else
        amount = amount + 1000;
      if (x.sex == 0)
        amount = amount + 500;
      else
        amount = amount + 1000;
    } else {
      amount = 1000 + 800 * x.income;
      if (x.marital == 0)
        if (x.dependents > 2)
          amount = amount + 100 * x.dependents;
        else
          amount = amount + 100;
      else
        amount = amount + 300;
      if (x.sex == 0)
        amount = amount + 100;
      else
        amount = amount + 200;
    }
  }
  return decide(amount);
}

Decision mutant11(const CustomerRecord& x) {
  int amount = 0;
  if (x.region == 5 || x.region == 6)
    amount = 0;
  else if (x.age < 18)
    amount = 0;
  else {
    if (x.citizenship == 0) {
      amount = 5000 + 1000 * x.income;
      if (x.state == 0)
        if (x.region == 2 || x.region == 3)  // M11, line 8
          amount = amount * 2;
        else
          amount = static_cast<int>(amount * 1.50);
      else
        amount = static_cast<int>(amount * 1.10);
      if (x.marital == 0)
        if (x.dependents > 0)
          amount = amount + 200 * x.dependents;
        else
          amount = amount + 500;
      else
        amount = amount + 1000;
      if (x.sex == 0)
        amount = amount + 500;
      else
        amount = amount + 1000;
    } else {
      amount = 1000 + 800 * x.income;
      if (x.marital == 0)
        if (x.dependents > 2)
          amount = amount + 100 * x.dependents;
        else
          amount = amount + 100;
      else
        amount = amount + 300;
      if (x.sex == 0)
        amount = amount + 100;
      else
        amount = amount + 200;
    }
  }
  return decide(amount);
}

Decision mutant12(const CustomerRecord& x) {
  int amount = 0;
  if (x.region == 5 || x.region == 6)
    amount = 0;
  else if (x.age < 18)
    amount = 0;
  else {
    if (x.citizenship == 0) {
      amount = 5000 + 1000 * x.income;
      if (x.state == 0)
        if (x.region == 1 || x.region == 2)  // M12, line 8
          amount = amount * 2;
        else
          amount = static_cast<int>(amount * 1.50);
      else
        amount = static_cast<int>(amount * 1.10);
      if (x.marital == 0)
        if (x.dependents > 0)
          amount = amount + 200 * x.dependents;
        else
          amount = amount + 500;
      else
        amount = amount + 1000;
      if (x.sex == 0)
        amount = amount + 500;
      else
        amount = amount + 1000;
    } else {
      amount = 1000 + 800 * x.income;
      if (x.marital == 0)
        if (x.dependents > 2)
          amount = amount + 100 * x.dependents;
        else
          amount = amount + 100;
      else
        amount = amount + 300;
      if (x.sex == 0)
        amount = amount + 100;
      else
        amount = amount + 200;
    }
  }
  return decide(amount);
}

Decision mutant13(const CustomerRecord& x) {
  int amount = 0;
  if (x.region == 5 || x.region == 6)
    amount = 0;
  else if (x.age < 18)
    amount = 0;
  else {
    if (x.citizenship == 0) {
      amount = 5000 + 1000 * x.income;
      if (x.state == 0)
        if (x.region == 3 || x.region == 4)
          amount = amount * 2;
        else
          amount = static_cast<int>(amount * 1.50);
      else
        amount = static_cast<int>(amount * 1.10);
      if (x.marital == 1)  // M13, line 11
        if (x.dependents > 0)
          amount = amount + 200 * x.dependents;
        else
          amount = amount + 500;
      else
        amount = amount + 1000;
      if (x.sex == 0)
        amount = amount + 500;
      else
        amount = amount + 1000;
    } else {
      amount = 1000 + 800 * x.income;
      if (x.marital == 0)
        if (x.dependents > 2)
          amount = amount + 100 * x.dependents;
        else
          amount = amount + 100;
      else
        amount = amount + 300;
      if (x.sex == 0)
        amount = amount + 100;
      else
        amount = amount + 200;
    }
  }
  return decide(amount);
}

Decision mutant14(const CustomerRecord& x) {
  int amount = 0;
  if (x.region == 5 || x.region == 6)
    amount = 0;
  else if (x.age < 18)
    amount = 0;
  else {
    if (x.citizenship == 0) {
      amount = 5000 + 1000 * x.income;
      if (x.state == 0)
        if (x.region == 3 || x.region == 4)
          amount = amount * 2;
        else
          amount = static_cast<int>(amount * 1.50);
      else
        amount = static_cast<int>(amount * 1.10);
      if (x.marital == 0)
        if (x.dependents == 0)  // M14, line 12
          amount = amount + 200 * x.dependents;
        else
          amount = amount + 500;
      else
        amount = amount + 1000;
      if (x.sex == 0)
        amount = amount + 500;
      else
        amount = amount + 1000;
    } else {
      amount = 1000 + 800 * x.income;
      if (x.marital == 0)
        if (x.dependents > 2)
          amount = amount + 100 * x.dependents;
        else
          amount = amount + 100;
      else
        amount = amount + 300;
      if (x.sex == 0)
        amount = amount + 100;
      else
        amount = amount + 200;
    }
  }
  return decide(amount);
}

Decision mutant15(const CustomerRecord& x) {
  int amount = 0;
  if (x.region == 5 || x.region == 6)
    amount = 0;
  else if (x.age < 18)
    amount = 0;
  else {
    if (x.citizenship == 0) {
      amount = 5000 + 1000 * x.income;
      if (x.state == 0)
        if (x.region == 3 || x.region == 4)
          amount = amount * 2;
        else
          amount = static_cast<int>(amount * 1.50);
      else
        amount = static_cast<int>(amount * 1.10);
      if (x.marital == 0)
        if (x.dependents < 0)  // M15, line 12
          amount = amount + 200 * x.dependents;
        else
          amount = amount + 500;
      else
        amount = amount + 1000;
      if (x.sex == 0)
        amount = amount + 500;
      else
        amount = amount + 1000;
    } else {
      amount = 1000 + 800 * x.income;
      if (x.marital == 0)
        if (x.dependents > 2)
          amount = amount + 100 * x.dependents;
        else
          amount = amount + 100;
      else
        amount = amount + 300;
      if (x.sex == 0)
        amount = amount + 100;
      else
        amount = amount + 200;
    }
  }
  return decide(amount);
}

Decision mutant16(const CustomerRecord& x) {
  int amount = 0;
  if (x.region == 5 || x.region == 6)
    amount = 0;
  else if (x.age < 18)
    amount = 0;
  else {
    if (x.citizenship == 0) {
      amount = 5000 + 1000 * x.income;
      if (x.state == 0)
        if (x.region == 3 || x.region == 4)
          amount = amount * 2;
        else
          amount = static_cast<int>(amount * 1.50);
      else
        amount = static_cast<int>(amount * 1.10);
      if (x.marital == 0)
        if (x.dependents > 0)
          amount = amount + 200 * x.dependents;
        else
          amount = amount + 500;
      else
        amount = amount + 1000;
      if (x.sex == 1)  // M16, line 15
        amount = amount + 500;
      else
        amount = amount + 1000;
    } else {
      amount = 1000 + 800 * x.income;
      if (x.marital == 0)
        if (x.dependents > 2)
          amount = amount + 100 * x.dependents;
        else
          amount = amount + 100;
      else
        amount = amount + 300;
      if (x.sex == 0)
        amount = amount + 100;
      else
        amount = amount + 200;
    }
  }
  return decide(amount);
}

Decision mutant17(const CustomerRecord& x) {
  int amount = 0;
  if (x.region == 5 || x.region == 6)
    amount = 0;
  else if (x.age < 18)
    amount = 0;
  else {
    if (x.citizenship == 0) {
      amount = 5000 + 1000 * x.income;
      if (x.state == 0)
        if (x.region == 3 || x.region == 4)
          amount = amount * 2;
        else
          amount = static_cast<int>(amount * 1.50);
      else
        amount = static_cast<int>(amount * 1.10);
      if (x.marital == 0)
        if (x.dependents > 0)
          amount = amount + 200 * x.dependents;
        else
          amount = amount + 500;
      else
        amount = amount + 1000;
      if (x.sex == 0)
        amount = amount + 500;
      else
        amount = amount + 1000;
    } else {
      amount = 1000 + 800 * x.income;
      if (x.marital == 1)  // M17, line 20
        if (x.dependents > 2)
          amount = amount + 100 * x.dependents;
        else
          amount = amount + 100;
      else
        amount = amount + 300;
      if (x.sex == 0)
        amount = amount + 100;
      else
        amount = amount + 200;
    }
  }
  return decide(amount);
}

Decision mutant18(const CustomerRecord& x) {
  int amount = 0;
  if (x.region == 5 || x.region == 6)
    amount = 0;
  else if (x.age < 18)
    amount = 0;
  else {
    if (x.citizenship == 0) {
      amount = 5000 + 1000 * x.income;
      if (x.state == 0)
        if (x.region == 3 || x.region == 4)
          amount = amount * 2;
        else
          amount = static_cast<int>(amount * 1.50);
      else
        amount = static_cast<int>(amount * 1.10);
      if (x.marital == 0)
        if (x.dependents > 0)
          amount = amount + 200 * x.dependents;
        else
          amount = amount + 500;
      else
        amount = amount + 1000;
      if (x.sex == 0)
        amount = amount + 500;
      else
        amount = amount + 1000;
    } else {
      amount = 1000 + 800 * x.income;
      if (x.marital == 0)
        if (x.dependents >= 2)  // M18, line 21
          amount = amount + 100 * x.dependents;
        else
          amount = amount + 100;
      else
        amount = amount + 300;
      if (x.sex == 0)
        amount = amount + 100;
      else
        amount = amount + 200;
    }
  }
  return decide(amount);
}

Decision mutant19(const CustomerRecord& x) {
  int amount = 0;
  if (x.region == 5 || x.region == 6)
    amount = 0;
  else if (x.age < 18)
    amount = 0;
  else {
    if (x.citizenship == 0) {
      amount = 5000 + 1000 * x.income;
      if (x.state == 0)
        if (x.region == 3 || x.region == 4)
          amount = amount * 2;
        else
          amount = static_cast<int>(amount * 1.50);
      else
        amount = static_cast<int>(amount * 1.10);
      if (x.marital == 0)
        if (x.dependents > 0)
          amount = amount + 200 * x.dependents;
        else
          amount = amount + 500;
      else
        amount = amount + 1000;
      if (x.sex == 0)
        amount = amount + 500;
      else
        amount = amount + 1000;
    } else {
      amount = 1000 + 800 * x.income;
      if (x.marital == 0)
        if (x.dependents < 2)  // M19, line 21
          amount = amount + 100 * x.dependents;
        else
          amount = amount + 100;
      else
        amount = amount + 300;
      if (x.sex == 0)
        amount = amount + 100;
      else
        amount = amount + 200;
    }
  }
  return decide(amount);
}

Decision mutant20(const CustomerRecord& x) {
  int amount = 0;
  if (x.region == 5 || x.region == 6)
    amount = 0;
  else if (x.age < 18)
    amount = 0;
  else {
    if (x.citizenship == 0) {
      amount = 5000 + 1000 * x.income;
      if (x.state == 0)
        if (x.region == 3 || x.region == 4)
          amount = amount * 2;
        else
          amount = static_cast<int>(amount * 1.50);
      else
        amount = static_cast<int>(amount * 1.10);
      if (x.marital == 0)
        if (x.dependents > 0)
          amount = amount + 200 * x.dependents;
        else
          amount = amount + 500;
      else
        amount = amount + 1000;
      if (x.sex == 0)
        amount = amount + 500;
      else
        amount = amount + 1000;
    } else {
      amount = 1000 + 800 * x.income;
      if (x.marital == 0)
        if (x.dependents <= 2)  // M20, line 21
          amount = amount + 100 * x.dependents;
        else
          amount = amount + 100;
      else
        amount = amount + 300;
      if (x.sex == 0)
        amount = amount + 100;
      else
        amount = amount + 200;
    }
  }
  return decide(amount);
}

Decision mutant21(const CustomerRecord& x) {
  int amount = 0;
  if (x.region == 5 || x.region == 6)
    amount = 0;
  else if (x.age < 18)
    amount = 0;
  else {
    if (x.citizenship == 0) {
      amount = 5000 + 1000 * x.income;
      if (x.state == 0)
        if (x.region == 3 || x.region == 4)
          amount = amount * 2;
        else
          amount = static_cast<int>(amount * 1.50);
      else
        amount = static_cast<int>(amount * 1.10);
      if (x.marital == 0)
        if (x.dependents > 0)
          amount = amount + 200 * x.dependents;
        else
          amount = amount + 500;
      else
        amount = amount + 1000;
      if (x.sex == 0)
        amount = amount + 500;
      else
        amount = amount + 1000;
    } else {
      amount = 1000 + 800 * x.income;
      if (x.marital == 0)
        if (x.dependents > 2)
          amount = amount + 100 * x.dependents;
        else
          amount = amount + 100;
      else
        amount = amount + 300;
      if (x.sex == 1)  // M21, line 24
        amount = amount + 100;
      else
        amount = amount + 200;
    }
  }
  return decide(amount);
}

}  // namespace

Decision mutant(int id, const CustomerRecord& x) {
  require_in_domain(x);
  switch (id) {
    case 1: return mutant1(x);
    case 2: return mutant2(x);
    case 3: return mutant3(x);
    case 4: return mutant4(x);
    case 5: return mutant5(x);
    case 6: return mutant6(x);
    case 7: return mutant7(x);
    case 8: return mutant8(x);
    case 9: return mutant9(x);
    case 10: return mutant10(x);
    case 11: return mutant11(x);
    case 12: return mutant12(x);
    case 13: return mutant13(x);
    case 14: return mutant14(x);
    case 15: return mutant15(x);
    case 16: return mutant16(x);
    case 17: return mutant17(x);
    case 18: return mutant18(x);
    case 19: return mutant19(x);
    case 20: return mutant20(x);
    case 21: return mutant21(x);
    default: throw std::domain_error("subject: mutant id must be in 1..21");
  }
}

bool is_exposing(int id, const CustomerRecord& x) {
  return mutant(id, x).amount != approve(x).amount;
}

CustomerRecord record_at(std::int64_t index) {
  if (index < 0 || index >= kDomainSize)
    throw std::domain_error("subject: record index out of range");
  std::array<int, 8> f{};
  for (int i = 7; i >= 0; --i) {
    const int base = kFieldMax[static_cast<std::size_t>(i)] + 1;
    f[static_cast<std::size_t>(i)] = static_cast<int>(index % base);
    index /= base;
  }
  return {f[0], f[1], f[2], f[3], f[4], f[5], f[6], f[7]};
}

std::int64_t index_of(const CustomerRecord& x) {
  require_in_domain(x);
  const std::array<int, 8> f = {x.citizenship, x.state,   x.region,     x.sex,
                                x.age,         x.marital, x.dependents, x.income};
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < f.size(); ++i) idx = idx * (kFieldMax[i] + 1) + f[i];
  return idx;
}

const std::array<MutantInfo, kMutantCount>& mutant_table() {
  static const std::array<MutantInfo, kMutantCount> table = {{
      {1, 2, "Region==5 || Region==6", "Region==5"},
      {2, 2, "Region==5 || Region==6", "Region==5 && Region==6"},
      {3, 2, "Region==5 || Region==6", "Region==4 || Region==5"},
      {4, 2, "Region==5 || Region==6", "Region==3 || Region==4"},
      {5, 3, "Age<18", "Age>18"},
      {6, 3, "Age<18", "Age<25"},
      {7, 5, "Citizenship==0", "Citizenship==1"},
      {8, 7, "State==0", "State==1"},
      {9, 8, "Region==3 || Region==4", "Region==3"},
      {10, 8, "Region==3 || Region==4", "Region==3 && Region==4"},
      {11, 8, "Region==3 || Region==4", "Region==2 || Region==3"},
      {12, 8, "Region==3 || Region==4", "Region==1 || Region==2"},
      {13, 11, "Marital==0", "Marital==1"},
      {14, 12, "Dependents>0", "Dependents==0"},
      {15, 12, "Dependents>0", "Dependents<0"},
      {16, 15, "Sex==0", "Sex==1"},
      {17, 20, "Marital==0", "Marital==1"},
      {18, 21, "Dependents>2", "Dependents>=2"},
      {19, 21, "Dependents>2", "Dependents<2"},
      {20, 21, "Dependents>2", "Dependents<=2"},
      {21, 24, "Sex==0", "Sex==1"},
  }};
  return table;
}

}  // namespace nno::subject
