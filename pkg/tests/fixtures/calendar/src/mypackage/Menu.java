package mypackage;

import java.time.YearMonth;
import java.util.Calendar;
import java.util.Date;
import java.util.GregorianCalendar;
import java.util.Scanner;

/**
 * Console menu for the calendar project.
 *
 * Options:
 *   1 - print the calendar of a whole year
 *   2 - print the calendar of one month
 *   3 - calculate age from a date of birth
 *   0 - quit
 *
 * Dates of birth are read as three numbers: day, month and year.
 *
 * @author xechnologi
 */
public class Menu {

    private static final String[] MONTH_NAMES = {
        "January", "February", "March", "April", "May", "June",
        "July", "August", "September", "October", "November", "December"
    };

    public static void main(String[] args) {
        Scanner input = new Scanner(System.in);
        boolean running = true;

        while (running) {
            System.out.println();
            System.out.println("===== Calendar Menu =====");
            System.out.println("1. Yearly calendar");
            System.out.println("2. Monthly calendar");
            System.out.println("3. Calculate age");
            System.out.println("0. Exit");
            System.out.print("Choose an option: ");

            int choice = input.nextInt();
            switch (choice) {
                case 1: {
                    System.out.print("Enter full year (e.g., 2001): ");
                    int year = input.nextInt();
                    for (int month = 1; month <= 12; month++) {
                        int startDay = CCalendar.getStartDay(year, month);
                        int numberOfDays = YearMonth.of(year, month).lengthOfMonth();

                        // Title
                        System.out.println();
                        System.out.println("         " + MONTH_NAMES[month - 1] + " " + year);
                        System.out.println("-----------------------------");
                        System.out.println(" Sun Mon Tue Wed Thu Fri Sat");

                        // Pad space before the first day of the month
                        for (int i = 0; i < startDay; i++)
                            System.out.print("    ");

                        for (int i = 1; i <= numberOfDays; i++) {
                            System.out.printf("%4d", i);
                            if ((i + startDay) % 7 == 0)
                                System.out.println();
                        }
                        System.out.println();
                    }
                    break;
                }
                case 2: {
                    System.out.print("Enter full year (e.g., 2001): ");
                    int year = input.nextInt();
                    System.out.print("Enter month in number between 1 and 12: ");
                    int month = input.nextInt();
                    if (month < 1 || month > 12) {
                        System.out.println("Invalid month: " + month);
                        break;
                    }
                    int startDay = CCalendar.getStartDay(year, month);
                    int numberOfDays = YearMonth.of(year, month).lengthOfMonth();

                    // Title
                    System.out.println("         " + MONTH_NAMES[month - 1] + " " + year);
                    System.out.println("-----------------------------");
                    System.out.println(" Sun Mon Tue Wed Thu Fri Sat");

                    // Pad space before the first day of the month
                    for (int i = 0; i < startDay; i++)
                        System.out.print("    ");

                    for (int i = 1; i <= numberOfDays; i++) {
                        System.out.printf("%4d", i);
                        if ((i + startDay) % 7 == 0)
                            System.out.println();
                    }
                    System.out.println();
                    break;
                }
                case 3: {
                    System.out.print("Enter date of birth (day month year): ");
                    int day = input.nextInt();
                    int month = input.nextInt();
                    int year = input.nextInt();
                    Calendar dob = new GregorianCalendar(year, month - 1, day);
                    CCalendar age = calculateAge(dob.getTime());
                    System.out.println("Your age is " + age.years + " years, "
                            + age.months + " months and " + age.days + " days.");
                    break;
                }
                case 0:
                    running = false;
                    break;
                default:
                    System.out.println("Unknown option: " + choice);
            }
        }
        input.close();
    }

    /** Calculate the age from the date of birth up to today */
    public static CCalendar calculateAge(Date mydob) {
        Calendar birth = new GregorianCalendar();
        birth.setTime(mydob);
        Calendar today = new GregorianCalendar();

        CCalendar age = new CCalendar();
        age.years = today.get(Calendar.YEAR) - birth.get(Calendar.YEAR);
        age.months = today.get(Calendar.MONTH) - birth.get(Calendar.MONTH);
        age.days = today.get(Calendar.DAY_OF_MONTH) - birth.get(Calendar.DAY_OF_MONTH);

        // Borrow a month when the day of month has not been reached yet
        if (age.days < 0) {
            age.months--;
            today.add(Calendar.MONTH, -1);
            age.days += today.getActualMaximum(Calendar.DAY_OF_MONTH);
        }
        // Borrow a year when the month has not been reached yet
        if (age.months < 0) {
            age.years--;
            age.months += 12;
        }
        return age;
    }
}
