namespace symgen {}
