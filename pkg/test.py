from semifield import run
run(['decide', '--class', 'semifield', 'x <= e \\/ x^2', 'x * y <= y * x'])
