package kit;

import java.util.Random;

public class NumberUtils {

    private static final Random RANDOM = new Random();

    public static int toInt(String s, int defaultValue) {
        try {
            return Integer.parseInt(s.trim());
        } catch (NumberFormatException e) {
            return defaultValue;
        }
    }

    public static int parseIntSafe(String value) {
        return toInt(value, 0);
    }

    public static String intToString(int n) {
        return Integer.toString(n);
    }

    public static int randomInt(int min, int max) {
        return RANDOM.nextInt(max - min + 1) + min;
    }

    public static double randomDouble() {
        return Math.random();
    }

    public static boolean isPrime(int n) {
        if (n < 2) {
            return false;
        }
        for (int i = 2; (long) i * i <= n; i++) {
            if (n % i == 0) {
                return false;
            }
        }
        return true;
    }

    public static int convertStringToInt(String s) {
        return Integer.valueOf(s);
    }
}
